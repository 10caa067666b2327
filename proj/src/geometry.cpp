#include "rhg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rhg/errors.hpp"

namespace rhg {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double sh2(double x) {
    double s = std::sinh(x);
    return s * s;
}

// log(sinh(x)) for x > 0 without overflow
double log_sinh(double x) {
    return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

void require_finite_radius(double r, const char* name) {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw domain_error(std::string(name) + " must be a finite nonnegative radius");
}

} // namespace

double hyperbolic_distance(double r1, double r2, double delta_theta) {
    require_finite_radius(r1, "r1");
    require_finite_radius(r2, "r2");
    if (!std::isfinite(delta_theta))
        throw domain_error("delta_theta must be finite");
    if (r1 < r2) std::swap(r1, r2);
    const double s = std::sin(0.5 * delta_theta);

    if (r1 + r2 <= 600.0) {
        const double h = sh2(0.5 * (r1 - r2)) + std::sinh(r1) * std::sinh(r2) * s * s;
        return 2.0 * std::asinh(std::sqrt(h));
    }

    // factor out exp(r1+r2)/4 and work with the bounded remainder q
    const double e1 = -std::expm1(-(r1 - r2));
    const double q = std::exp(-2.0 * r2) * e1 * e1 +
                     (-std::expm1(-2.0 * r1)) * (-std::expm1(-2.0 * r2)) * s * s;
    if (q == 0.0) return 0.0;
    const double logw = 0.5 * (r1 + r2) + 0.5 * std::log(q) - kLn2;
    if (logw > 20.0) return 2.0 * (logw + kLn2);
    return 2.0 * std::asinh(std::exp(logw));
}

double point_distance(const PolarPoint& a, const PolarPoint& b, double R) {
    return hyperbolic_distance(R - a.t, R - b.t, a.theta - b.theta);
}

double connection_angle_exact(double r1, double r2, double R) {
    require_finite_radius(r1, "r1");
    require_finite_radius(r2, "r2");
    if (!(R > 0.0) || !std::isfinite(R))
        throw domain_error("R must be a finite positive radius");
    if (r1 + r2 == 0.0) return kPi;

    if (std::max(r1 + r2, R) <= 650.0) {
        const double a = sh2(0.5 * R) - sh2(0.5 * (r1 - r2));
        const double b = sh2(0.5 * (r1 + r2)) - sh2(0.5 * R);
        if (b <= 0.0) return kPi;
        if (a <= 0.0) return 0.0;
        return 2.0 * std::atan2(std::sqrt(a), std::sqrt(b));
    }

    const double LR = 2.0 * log_sinh(0.5 * R);
    const double Lsum = 2.0 * log_sinh(0.5 * (r1 + r2));
    const double Ldiff = r1 == r2 ? -std::numeric_limits<double>::infinity()
                                  : 2.0 * log_sinh(0.5 * std::fabs(r1 - r2));
    if (Lsum <= LR) return kPi;
    if (LR <= Ldiff) return 0.0;
    const double la = LR + std::log1p(-std::exp(Ldiff - LR));
    const double lb = Lsum + std::log1p(-std::exp(LR - Lsum));
    return 2.0 * std::atan(std::exp(0.5 * (la - lb)));
}

double connection_angle_approx(double t1, double t2, double R) {
    if (!(t1 >= 0.0 && t2 >= 0.0 && t1 + t2 <= R))
        throw domain_error("connection_angle_approx requires t1, t2 >= 0 and t1 + t2 <= R");
    return 2.0 * std::exp(-0.5 * (R - t1 - t2));
}

double ball_measure(double rho, double R, double alpha) {
    if (!(alpha > 0.0) || !(R > 0.0) || !std::isfinite(R))
        throw domain_error("ball_measure requires alpha > 0 and finite R > 0");
    if (!(rho >= 0.0 && rho <= R))
        throw domain_error("ball_measure requires 0 <= rho <= R");
    if (rho == 0.0) return 0.0;
    const double ratio = std::expm1(-alpha * rho) / std::expm1(-alpha * R);
    return std::exp(alpha * (rho - R)) * ratio * ratio;
}

double ball_measure_approx(double rho, const ModelParams& p) {
    const double R = p.radius();
    if (!(rho >= 0.0 && rho <= R))
        throw domain_error("ball_measure_approx requires 0 <= rho <= R");
    return p.nu * std::exp(-p.alpha * (R - rho)) / static_cast<double>(p.n);
}

double sample_radius(double u, double alpha, double R) {
    if (!(u >= 0.0 && u <= 1.0))
        throw domain_error("sample_radius requires u in [0, 1]");
    if (!(alpha > 0.0) || !(R > 0.0) || !std::isfinite(R))
        throw domain_error("sample_radius requires alpha > 0 and finite R > 0");
    if (u == 0.0) return 0.0;

    const double aR = alpha * R;
    if (aR <= 600.0) {
        const double z = u * 2.0 * sh2(0.5 * aR);
        if (z > 1e8) return std::log(2.0 * z + 2.0) / alpha;
        return std::log1p(z + std::sqrt(z * (z + 2.0))) / alpha;
    }
    // cosh(aR) overflows; work with log(z)
    const double lz = std::log(u) + kLn2 + 2.0 * log_sinh(0.5 * aR);
    if (lz > 37.0) return (kLn2 + lz) / alpha;
    const double z = std::exp(lz);
    return std::log1p(z + std::sqrt(z * (z + 2.0))) / alpha;
}

} // namespace rhg
