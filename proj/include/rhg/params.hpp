#pragma once

#include <cstdint>

namespace rhg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Point in the disk, stored as depth below the rim: t = R - r.
// theta is always kept in [0, 2*pi).
struct PolarPoint {
    double t = 0.0;
    double theta = 0.0;
};

// Reduce an arbitrary angle to [0, 2*pi).
double wrap_angle(double theta);

// Shorter of the two arcs between angles, in [0, pi].
double circular_distance(double a, double b);

struct ModelParams {
    double alpha = 1.0;
    double nu = 1.0;
    double n = 0.0;  // expected vertex count, real-valued
    std::uint64_t seed = 1;

    // Disk radius R = 2 log(n / nu), always recomputed, never stored.
    double radius() const;

    bool subcritical() const { return alpha > 1.0; }

    // Throws parameter_error unless alpha > 1/2, nu > 0, n > 0 and n > nu
    // (so R > 0).  Values 1/2 < alpha <= 1 are accepted; callers that need
    // the subcritical regime use require_subcritical().
    void validate() const;

    // validate() plus alpha > 1.
    void require_subcritical() const;
};

} // namespace rhg
