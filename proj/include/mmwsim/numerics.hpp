// SPDX-License-Identifier: Apache-2.0

#ifndef MMWSIM_NUMERICS_HPP
#define MMWSIM_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>

#include "mmwsim/errors.hpp"

namespace mmwsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Counter-seeded random stream. Identical (seed, stream_id) pairs produce
/// bit-identical draw sequences independent of platform, thread, or call
/// site; workers key their streams by (trial, state) and never share them.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id);

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [a, b).
    double uniform(double a, double b);
    /// Standard normal N(0, 1), Box-Muller.
    double normal();
    /// Circularly symmetric CN(0, 1) = N(0, 1/2) + j N(0, 1/2).
    Complex complex_normal();

  private:
    std::uint64_t next();
    std::uint64_t state_[4];
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// log2|I + scale * h * h^H| via Cholesky of the Gram matrix on the smaller
/// dimension. Throws std::domain_error on non-finite entries.
double logdet2_capacity(const CMatrix &h, double scale);

/// Inverse error function, |x| < 1. Initial approximation refined by Newton
/// iterations on std::erf; round trip accurate to ~1e-15.
double erf_inv(double x);

/// Adaptive Gauss-Kronrod quadrature of f over [lower, inf). The truncation
/// point is pushed out until |f| < abs_tol/100, then the upper limit is
/// doubled until two successive doublings move the estimate by < abs_tol.
/// Throws ConvergenceError (with the best estimate) on failure.
double integrate_to_infinity(const std::function<double(double)> &f,
                             double lower, double abs_tol);

} // namespace mmwsim

#endif
