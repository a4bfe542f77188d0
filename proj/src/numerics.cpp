// SPDX-License-Identifier: Apache-2.0

#include "mmwsim/numerics.hpp"

#include <cmath>
#include <limits>

namespace mmwsim {

namespace {

std::uint64_t splitmix64(std::uint64_t &x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
    // Expand (seed, stream_id) through splitmix64 so nearby keys give
    // unrelated xoshiro256** states.
    std::uint64_t s = seed ^ rotl(stream_id, 17) ^ 0xd6e8feb86659fd93ull;
    std::uint64_t t = stream_id + 0xa5a3564d1ed93e1full;
    s ^= splitmix64(t);
    state_[0] = splitmix64(s);
    state_[1] = splitmix64(s);
    state_[2] = splitmix64(s);
    state_[3] = splitmix64(s);
}

std::uint64_t RandomStream::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b) {
    return a + (b - a) * uniform();
}

double RandomStream::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // Box-Muller; u1 kept away from 0.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

Complex RandomStream::complex_normal() {
    const double s = std::sqrt(0.5);
    const double re = normal();
    const double im = normal();
    return Complex(s * re, s * im);
}

double logdet2_capacity(const CMatrix &h, double scale) {
    if (!h.allFinite())
        throw std::domain_error("logdet2_capacity: non-finite channel entry");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::domain_error("logdet2_capacity: scale must be positive");
    if (h.size() == 0)
        return 0.0;

    // |I + s H H^H| = |I + s H^H H|; factor the smaller Gram matrix.
    const Eigen::Index n = std::min(h.rows(), h.cols());
    CMatrix m;
    if (h.rows() <= h.cols())
        m = CMatrix::Identity(n, n) + scale * (h * h.adjoint());
    else
        m = CMatrix::Identity(n, n) + scale * (h.adjoint() * h);

    Eigen::LLT<CMatrix> llt(m);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("logdet2_capacity: Cholesky failed");

    double logdet = 0.0;
    const auto &l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < n; ++i)
        logdet += std::log(std::real(l(i, i)));
    return std::max(0.0, 2.0 * logdet / std::log(2.0));
}

double erf_inv(double x) {
    if (!(std::abs(x) < 1.0))
        throw std::domain_error("erf_inv: argument must satisfy |x| < 1");
    if (x == 0.0)
        return 0.0;

    // Winitzki starting approximation (~2e-3), then Newton on erf.
    const double a = 0.147;
    const double ln1mx2 = std::log1p(-x * x);
    const double c = 2.0 / (M_PI * a) + 0.5 * ln1mx2;
    double t = std::sqrt(std::sqrt(c * c - ln1mx2 / a) - c);
    if (x < 0.0)
        t = -t;

    const double half_sqrt_pi = 0.5 * std::sqrt(M_PI);
    for (int iter = 0; iter < 6; ++iter) {
        const double err = std::erf(t) - x;
        if (err == 0.0)
            break;
        const double step = err * half_sqrt_pi * std::exp(t * t);
        t -= step;
        if (std::abs(step) < 1e-17 * (1.0 + std::abs(t)))
            break;
    }
    return t;
}

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
const double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)> &f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0;
    double resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kGK15Nodes[i];
        double fsum;
        if (i == 7) {
            fsum = f(c);
        } else {
            fsum = f(c - dx) + f(c + dx);
        }
        resk += kGK15WeightsK[i] * fsum;
        if (i % 2 == 1)
            resg += kGK15WeightsG[i / 2] * fsum;
        else if (i == 7)
            resg += kGK15WeightsG[3] * fsum;
    }
    // Gauss rule uses odd Kronrod nodes plus the center.
    return {resk * h, std::abs(resk - resg) * h};
}

double adaptive(const std::function<double(double)> &f, double a, double b,
                double tol, int depth, bool &ok) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= 40)
        return r.integral;
    if (depth >= 38)
        ok = false;
    const double c = 0.5 * (a + b);
    return adaptive(f, a, c, 0.5 * tol, depth + 1, ok) +
           adaptive(f, c, b, 0.5 * tol, depth + 1, ok);
}

} // namespace

double integrate_to_infinity(const std::function<double(double)> &f,
                             double lower, double abs_tol) {
    if (!(abs_tol > 0.0))
        throw std::domain_error("integrate_to_infinity: abs_tol must be > 0");

    // Find a truncation point where the integrand has decayed.
    const double cutoff = abs_tol / 100.0;
    double span = 1.0;
    double upper = lower + span;
    int probes = 0;
    while (std::abs(f(upper)) >= cutoff) {
        span *= 2.0;
        upper = lower + span;
        if (++probes > 80)
            throw ConvergenceError(
                "integrate_to_infinity: integrand does not decay below "
                "abs_tol/100",
                std::numeric_limits<double>::quiet_NaN());
    }

    bool ok = true;
    double total = adaptive(f, lower, upper, 0.25 * abs_tol, 0, ok);

    // Extend the tail by doubling the span until two successive doublings
    // change the estimate by less than abs_tol.
    int quiet = 0;
    int iter = 0;
    while (quiet < 2) {
        const double next_upper = lower + 2.0 * (upper - lower);
        const double tail = adaptive(f, upper, next_upper, 0.25 * abs_tol, 0, ok);
        total += tail;
        upper = next_upper;
        quiet = (std::abs(tail) < abs_tol) ? quiet + 1 : 0;
        if (++iter > 60)
            throw ConvergenceError(
                "integrate_to_infinity: tail extension did not converge",
                total);
    }
    if (!ok)
        throw ConvergenceError(
            "integrate_to_infinity: adaptive refinement hit depth cap", total);
    return total;
}

} // namespace mmwsim
