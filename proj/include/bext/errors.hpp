// SPDX-License-Identifier: MIT
//
// Exception types thrown by the numerical kernels.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bext {

/// Newton iteration for the barycenter failed to reach the residual tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& msg, std::complex<double> z,
                 double residual_norm, int iterations)
      : std::runtime_error(msg), z(z),
        residual_norm(residual_norm), iterations(iterations) {}
  std::complex<double> z;   ///< evaluation point that failed
  double residual_norm;     ///< |F| at the last iterate
  int iterations;           ///< iterations spent
};

/// The Beltrami quotient N/D was requested where |D| is numerically zero.
class DegenerateJacobian : public std::runtime_error {
 public:
  DegenerateJacobian(const std::string& msg, std::complex<double> z)
      : std::runtime_error(msg), z(z) {}
  std::complex<double> z;
};

/// Schwarzian derivative requested at a point where f' vanishes.
class CriticalPoint : public std::runtime_error {
 public:
  CriticalPoint(const std::string& msg, std::complex<double> z)
      : std::runtime_error(msg), z(z) {}
  std::complex<double> z;
};

/// The reflected coefficient field has a pole at the origin
/// (series decays slower than z^-4 at infinity).
class OriginSingularity : public std::runtime_error {
 public:
  explicit OriginSingularity(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace bext
