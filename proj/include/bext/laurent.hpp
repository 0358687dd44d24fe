// SPDX-License-Identifier: MIT
//
// Finite Laurent series with a domain tag (unit disk or its exterior).
// Coefficients are stored densely from n_min upward; differentiation and
// evaluation are exact termwise operations, which is what lets the
// Schwarzian tests assert annihilation identities with zero tolerance.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bext/grid.hpp"

namespace bext {

enum class Domain { disk, exterior };

class LaurentSeries {
 public:
  LaurentSeries() = default;

  LaurentSeries(Domain dom, int n_min, std::vector<cplx> coeffs)
      : domain_(dom), n_min_(n_min), a_(std::move(coeffs)) {}

  Domain domain() const { return domain_; }
  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(a_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return a_; }
  bool empty() const { return a_.empty(); }

  /// Coefficient of z^n (zero outside the stored range).
  cplx coeff(int n) const {
    int i = n - n_min_;
    if (i < 0 || i >= static_cast<int>(a_.size())) return {};
    return a_[i];
  }

  /// Smallest exponent carrying a nonzero coefficient; `none` if f == 0.
  int lowest_degree(int none = 0) const {
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != cplx{}) return n_min_ + static_cast<int>(i);
    return none;
  }

  /// Largest exponent carrying a nonzero coefficient; `none` if f == 0.
  int highest_degree(int none = 0) const {
    for (std::size_t i = a_.size(); i-- > 0;)
      if (a_[i] != cplx{}) return n_min_ + static_cast<int>(i);
    return none;
  }

  bool is_zero() const {
    for (const auto& c : a_)
      if (c != cplx{}) return false;
    return true;
  }

  /// Evaluate by two Horner sweeps: nonnegative powers in z, negative
  /// powers in 1/z.  z = 0 is allowed only when every negative power has a
  /// zero coefficient.
  cplx operator()(cplx z) const {
    cplx pos{};
    if (n_max() >= 0) {
      for (int n = n_max(); n >= 0; --n) pos = pos * z + coeff(n);
    }
    cplx neg{};
    if (n_min_ < 0) {
      bool have_neg = false;
      for (int n = n_min_; n <= -1 && !have_neg; ++n)
        if (coeff(n) != cplx{}) have_neg = true;
      if (have_neg) {
        if (z == cplx{})
          throw std::invalid_argument(
              "LaurentSeries: evaluation at 0 with negative powers present");
        const cplx iz = 1.0 / z;
        for (int m = -n_min_; m >= 1; --m) neg = neg * iz + coeff(-m);
        neg *= iz;
      }
    }
    return pos + neg;
  }

  /// Termwise derivative: d/dz sum a_n z^n = sum n a_n z^{n-1}.
  LaurentSeries derivative() const {
    if (a_.empty()) return LaurentSeries(domain_, 0, {});
    std::vector<cplx> d;
    d.reserve(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) {
      int n = n_min_ + static_cast<int>(i);
      d.push_back(a_[i] * static_cast<double>(n));
    }
    return LaurentSeries(domain_, n_min_ - 1, std::move(d));
  }

  /// Multiply by z^k (exponent shift).
  LaurentSeries shifted(int k) const {
    return LaurentSeries(domain_, n_min_ + k, a_);
  }

  LaurentSeries scaled(cplx c) const {
    std::vector<cplx> s(a_);
    for (auto& v : s) v *= c;
    return LaurentSeries(domain_, n_min_, std::move(s));
  }

 private:
  Domain domain_ = Domain::disk;
  int n_min_ = 0;
  std::vector<cplx> a_;
};

}  // namespace bext
