#pragma once

#include "rhg/params.hpp"

namespace rhg {

// Distance between points at radii r1, r2 with angular separation delta_theta.
// Stable for radii far beyond double overflow of cosh/sinh.
double hyperbolic_distance(double r1, double r2, double delta_theta);

// Distance between two rim-depth points in a disk of radius R.
double point_distance(const PolarPoint& a, const PolarPoint& b, double R);

// Largest angular separation at which points at radii r1, r2 satisfy
// distance <= R.  Returns 0 when even aligned points are too far apart,
// pi when even opposite points are within range.
double connection_angle_exact(double r1, double r2, double R);

// Standard asymptotic form 2*exp(-(R - t1 - t2)/2) in rim-depth coordinates.
// Requires t1, t2 >= 0 and t1 + t2 <= R.
double connection_angle_approx(double t1, double t2, double R);

// Probability mass of the ball B_O(rho) under the radial density, i.e. the
// radial CDF at rho.  Requires 0 <= rho <= R.
double ball_measure(double rho, double R, double alpha);

// First-order approximation of the same mass.
double ball_measure_approx(double rho, const ModelParams& p);

// Inverse radial CDF: the radius whose ball measure equals u in [0, 1].
double sample_radius(double u, double alpha, double R);

} // namespace rhg
