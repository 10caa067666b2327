#include "rhg/params.hpp"

#include <cmath>
#include <string>

#include "rhg/errors.hpp"

namespace rhg {

double wrap_angle(double theta) {
    double x = std::fmod(theta, kTwoPi);
    if (x < 0.0) x += kTwoPi;
    // fmod can round a tiny negative back up to exactly 2*pi
    if (x >= kTwoPi) x = 0.0;
    return x;
}

double circular_distance(double a, double b) {
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

double ModelParams::radius() const {
    return 2.0 * std::log(n / nu);
}

void ModelParams::validate() const {
    if (!(alpha > 0.5))
        throw parameter_error("alpha must be > 1/2, got " + std::to_string(alpha));
    if (!(nu > 0.0))
        throw parameter_error("nu must be > 0, got " + std::to_string(nu));
    if (!(n > 0.0))
        throw parameter_error("n must be > 0");
    if (!(n > nu))
        throw parameter_error("n must exceed nu so the disk radius R is positive");
}

void ModelParams::require_subcritical() const {
    validate();
    if (!subcritical())
        throw parameter_error("this operation requires alpha > 1, got " + std::to_string(alpha));
}

} // namespace rhg
