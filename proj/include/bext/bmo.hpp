// SPDX-License-Identifier: MIT
//
// Dyadic mean-oscillation estimator for sampled periodic functions.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bext {

/// Max mean oscillation (1/|I|) int_I |f - f_I| over the dyadic arc family:
/// arc lengths M, M/2, M/4, ... samples (>= 2), every grid-aligned start.
/// This is a lower estimate of the BMO norm -- the maximizing arc of the
/// continuum problem need not be dyadic -- with O(M^2) cost.  Means are
/// taken over samples, so the estimate converges at the rectangle-rule rate
/// of the underlying sampling.
inline double bmo_norm(const std::vector<double>& f) {
  const int M = static_cast<int>(f.size());
  if (M < 4) throw std::invalid_argument("bmo_norm: need at least 4 samples");
  // prefix sums over the doubled sequence, so wrapped arcs are one lookup
  std::vector<double> pre(2 * M + 1, 0.0);
  for (int i = 0; i < 2 * M; ++i) pre[i + 1] = pre[i] + f[i % M];
  double best = 0.0;
  for (int L = M; L >= 2; L /= 2) {
    const int starts = (L == M) ? 1 : M;  // full circle: all starts coincide
    for (int s = 0; s < starts; ++s) {
      const double mean = (pre[s + L] - pre[s]) / L;
      double osc = 0.0;
      for (int i = s; i < s + L; ++i) osc += std::abs(f[i % M] - mean);
      const double mo = osc / L;
      if (mo > best) best = mo;
    }
  }
  return best;
}

}  // namespace bext
