// SPDX-License-Identifier: MIT
//
// Real trigonometric polynomials b(u) = b0 + sum_{n>=1} (b_n e^{inu} + conj),
// their exact antiderivatives, and the analytic primitive
// F(z) = -i sum_{n>=1} (b_n/n) z^n whose boundary values recover the
// antiderivative up to a constant.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "bext/grid.hpp"
#include "bext/laurent.hpp"

namespace bext {

/// Real-valued trigonometric polynomial stored by its analytic half:
/// b(u) = b0 + 2 Re sum_{n>=1} c_n e^{inu}, with c_n complex.
/// Reality is built into the representation.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;

  TrigPolynomial(double b0, std::vector<cplx> coeffs)
      : b0_(b0), c_(std::move(coeffs)) {}

  /// b(u) = amp*cos(n*u):  c_n = amp/2.
  static TrigPolynomial cosine(int n, double amp = 1.0) {
    if (n < 1) throw std::invalid_argument("cosine: need n >= 1");
    std::vector<cplx> c(n);
    c[n - 1] = cplx(amp / 2, 0);
    return TrigPolynomial(0.0, std::move(c));
  }

  /// b(u) = amp*sin(n*u):  c_n = -i*amp/2.
  static TrigPolynomial sine(int n, double amp = 1.0) {
    if (n < 1) throw std::invalid_argument("sine: need n >= 1");
    std::vector<cplx> c(n);
    c[n - 1] = cplx(0, -amp / 2);
    return TrigPolynomial(0.0, std::move(c));
  }

  double b0() const { return b0_; }
  const std::vector<cplx>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()); }
  bool mean_zero() const { return b0_ == 0.0; }

  double operator()(double u) const {
    double s = b0_;
    for (int n = 1; n <= degree(); ++n) {
      const cplx& cn = c_[n - 1];
      s += 2.0 * (cn.real() * std::cos(n * u) - cn.imag() * std::sin(n * u));
    }
    return s;
  }

  /// Cheap upper bound for sup|b|:  |b0| + 2 sum |c_n|.
  double sup_bound() const {
    double s = std::abs(b0_);
    for (const auto& cn : c_) s += 2.0 * std::abs(cn);
    return s;
  }

  TrigPolynomial scaled(double a) const {
    std::vector<cplx> c(c_);
    for (auto& v : c) v *= a;
    return TrigPolynomial(a * b0_, std::move(c));
  }

  TrigPolynomial operator+(const TrigPolynomial& o) const {
    std::vector<cplx> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i < c_.size()) c[i] += c_[i];
      if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return TrigPolynomial(b0_ + o.b0_, std::move(c));
  }

 private:
  double b0_ = 0.0;
  std::vector<cplx> c_;  // c_[n-1] is the coefficient of e^{inu}
};

/// Antiderivative B(u) = int_0^u b, exact termwise:
/// B(u) = b0*u + sum_n (2/n)(Re c_n sin(nu) + Im c_n (cos(nu) - 1)).
/// B(0) = 0 by construction; B is 2*pi-periodic iff b is mean-zero.
/// Stores grid samples alongside the closed-form evaluator.
class Antiderivative {
 public:
  Antiderivative(const TrigPolynomial& b, int grid_size)
      : b_(b), vals_(grid_size) {
    for (int k = 0; k < grid_size; ++k) vals_[k] = (*this)(two_pi * k / grid_size);
  }

  double operator()(double u) const {
    double s = b_.b0() * u;
    for (int n = 1; n <= b_.degree(); ++n) {
      const cplx& cn = b_.coeffs()[n - 1];
      s += 2.0 / n *
           (cn.real() * std::sin(n * u) + cn.imag() * (std::cos(n * u) - 1.0));
    }
    return s;
  }

  int grid_size() const { return static_cast<int>(vals_.size()); }
  const std::vector<double>& values() const { return vals_; }

 private:
  TrigPolynomial b_;
  std::vector<double> vals_;  // B at u_k = 2*pi*k/grid_size
};

inline Antiderivative antiderivative(const TrigPolynomial& b,
                                     int grid_size = 4096) {
  return Antiderivative(b, grid_size);
}

/// Analytic primitive on the disk: F(z) = -i sum_{n>=1} (c_n/n) z^n.
/// Requires mean-zero b.  On the boundary, B(u) - 2 Re F(e^{iu}) is the
/// constant -2 Re F(1) (zero whenever all coefficients are real, e.g. pure
/// cosine data); integral functionals of B built against kernels with no
/// constant Fourier mode are insensitive to it.
inline LaurentSeries cauchy_primitive(const TrigPolynomial& b) {
  if (!b.mean_zero())
    throw std::invalid_argument("cauchy_primitive: b must be mean-zero");
  std::vector<cplx> f(b.degree() + 1);  // n = 0..degree, f[0] = 0
  for (int n = 1; n <= b.degree(); ++n)
    f[n] = cplx(0, -1) * b.coeffs()[n - 1] / static_cast<double>(n);
  return LaurentSeries(Domain::disk, 0, std::move(f));
}

}  // namespace bext
