#include "codebench/bounds.hpp"

#include <cmath>
#include <numbers>

namespace codebench {

double q_func(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double inverse_q(double p)
{
    if (!(p > 0.0) || !(p < 1.0)) throw DomainError("inverse_q needs p in (0, 1)");
    double lo = -40.0, hi = 40.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (q_func(mid) > p ? lo : hi) = mid;
    }
    // Newton polish against the normal density.
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
        if (pdf < 1e-300) break;
        z -= (p - q_func(z)) / pdf;
    }
    return z;
}

BoundPoint ppv_bec(std::size_t n, double rate, double eps)
{
    if (!(eps > 0.0) || !(eps < 1.0)) throw DomainError("ppv_bec needs 0 < eps < 1");
    if (!(rate > 0.0) || !(rate < 1.0)) throw DomainError("ppv_bec needs 0 < R < 1");
    const double arg =
        (1.0 - eps - rate) / std::sqrt(eps * (1.0 - eps)) * std::sqrt(static_cast<double>(n));
    return {eps, q_func(arg), n, rate, "ppv", false};
}

double shannon_cone_angle(std::size_t n, double rate)
{
    if (n < 8) throw DomainError("shannon_cone_angle needs n >= 8");
    if (!(rate > 0.0) || !(rate < 1.0)) throw DomainError("shannon_cone_angle needs 0 < R < 1");

    const double nd = static_cast<double>(n);
    const double target = nd * rate * std::numbers::ln2;
    auto f = [&](double t) {
        return 0.5 * std::log(2.0 * std::numbers::pi * nd) + std::log(std::sin(t)) +
               std::log(std::cos(t)) - nd * std::log(std::sin(t)) - target;
    };

    double lo = 1e-9, hi = std::numbers::pi / 2.0 - 1e-12;
    if (!(f(lo) > 0.0) || !(f(hi) < 0.0)) throw NoRoot("cone-angle bracket failed");
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::fabs(fm) < 1e-10) break;
        (fm > 0.0 ? lo : hi) = mid;
    }
    if (std::fabs(f(mid)) >= 1e-9) throw NoRoot("cone-angle bisection did not converge");
    return mid;
}

BoundPoint shannon_sphere_bound(std::size_t n, double rate, double ebn0_db)
{
    const double theta = shannon_cone_angle(n, rate);
    const double nd = static_cast<double>(n);
    const double a = 2.0 * rate * std::pow(10.0, ebn0_db / 10.0);  // 2 R Eb/N0
    const double sq = std::sqrt(a);
    const double st = std::sin(theta), ct = std::cos(theta);

    const double g = 0.5 * (sq * ct + std::sqrt(a * ct * ct + 4.0));
    const double denom = sq * g * st * st - ct;
    if (!(denom > 0.0))
        throw DomainError("sphere-bound approximation invalid at this Eb/N0 (denominator <= 0)");

    // ln of the n-th-power factor; direct evaluation underflows for n >= ~100.
    const double ln_bracket = std::log(g * st) - 0.5 * a + 0.5 * sq * g * ct;
    const double ln_p = -0.5 * std::log(nd * std::numbers::pi) -
                        0.5 * std::log1p(g * g) - std::log(st) + nd * ln_bracket -
                        std::log(denom);

    BoundPoint bp{ebn0_db, 0.0, n, rate, "shannon-sphere", false};
    if (ln_p > 0.0) {
        bp.p_ew = 1.0;
        bp.clamped = true;
    } else {
        bp.p_ew = std::exp(ln_p);
    }
    return bp;
}

}  // namespace codebench
