// SPDX-License-Identifier: MIT
//
// Norm comparison on quadratic differentials: hyperbolic sup norm versus the
// box norm of |phi|^2 (1-|z|^2)^3 dA, the 32 sqrt(2)/3 inequality between
// them, and the Ahlfors-Weill dilatation induced by exterior data with
// quartic decay.

#include <cmath>
#include <cstdio>
#include <vector>

#include "bext/bext.hpp"

using namespace bext;

int main() {
  const double C = 32.0 * std::sqrt(2.0) / 3.0;
  std::printf("norm inequality constant C = 32 sqrt(2)/3 = %.6f\n\n", C);

  std::printf("disk polynomials (k+1) z^k:\n");
  std::printf("  k   sup norm    box norm    C * box     sup <= C box\n");
  for (int k = 0; k <= 6; ++k) {
    std::vector<cplx> coeffs(k + 1, cplx(0, 0));
    coeffs[k] = cplx(k + 1.0, 0);
    const LaurentSeries phi(Domain::disk, 0, coeffs);
    const double lhs = hyp_sup_norm(phi);
    const double rhs = curly_b_norm(phi);
    std::printf("  %d   %.6f   %.6f   %9.6f   %s\n", k, lhs, rhs, C * rhs,
                lhs <= C * rhs ? "yes" : "NO");
  }

  std::printf("\nexterior data phi = 1/z^4 (Schwarzian-like decay):\n");
  const LaurentSeries q4(Domain::exterior, -4, {cplx(1, 0)});
  std::printf("  hyperbolic sup norm = %.12f\n", hyp_sup_norm(q4));
  std::printf("  box norm            = %.12f\n", curly_b_norm(q4));

  std::printf("\nAhlfors-Weill coefficient mu(z) = -(1/2)(1-|z|^2)^2 "
              "phi(1/conj z) / conj(z)^4 along the real radius:\n");
  for (double r : {0.0, 0.25, 0.5, 0.75, 0.9}) {
    const cplx m = ahlfors_weill_mu(q4, cplx(r, 0));
    std::printf("  |mu(%.2f)| = %.6f\n", r, std::abs(m));
  }
  std::printf("  sup bound (1/2) ||phi|| = %.6f\n", 0.5 * hyp_sup_norm(q4));

  // a sample Schwarzian: the squaring map has S = -3/(2 z^2)
  const LaurentSeries sq(Domain::disk, 0,
                         {cplx(0, 0), cplx(0, 0), cplx(1, 0)});
  const cplx s = schwarzian(sq, cplx(2, 0));
  std::printf("\nS_{z^2}(2) = (%.6f, %.6f), closed form -3/8 = %.6f\n",
              s.real(), s.imag(), -3.0 / 8.0);
  return 0;
}
