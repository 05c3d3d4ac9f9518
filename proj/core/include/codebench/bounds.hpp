#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace codebench {

struct NoRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundPoint {
    double channel_param = 0.0;  // eps (BEC) or Eb/N0 in dB (AWGN)
    double p_ew = 0.0;
    std::size_t n = 0;
    double rate = 0.0;
    std::string bound;     // "ppv" | "shannon-sphere"
    bool clamped = false;  // value exceeded 1 before clamping
};

/// Upper-tail standard normal probability.
double q_func(double x);

/// Inverse of q_func on (0, 1).
double inverse_q(double p);

/// Normal approximation of the best achievable word error probability on the
/// BEC: Q(((1 - eps - R) / sqrt(eps (1 - eps))) sqrt(n)). Requires
/// 0 < eps < 1.
BoundPoint ppv_bec(std::size_t n, double rate, double eps);

/// Root of 2^(nR) = sqrt(2 pi n) sin(t) cos(t) / sin(t)^n in (0, pi/2),
/// found by bisection on the log form; residual below 1e-9 or NoRoot.
double shannon_cone_angle(std::size_t n, double rate);

/// Word error probability approximation for optimal spherical codes,
/// evaluated in the log domain. Throws DomainError where the approximation's
/// denominator is not positive.
BoundPoint shannon_sphere_bound(std::size_t n, double rate, double ebn0_db);

}  // namespace codebench
