#pragma once

#include "angmax/simple_function.hpp"

namespace angmax {

/// Geometry attached to one radius of the kernel-splitting argument: the
/// maximizing angle theta_star in (0, pi/2], the Cartesian point
/// (x_star, y_star) = R(cos, sin)(theta_star) and the gap delta = R - x_star.
/// The identity y_star^2 + delta^2 = 2 R delta holds by construction.
struct SplitGeometry {
    double R;
    double theta_star;
    double x_star;
    double y_star;
    double delta;

    SplitGeometry(double radius, double theta);

    /// Mirror image for maximizing angles in [pi/2, pi): the split runs on
    /// the reflected angle pi - theta with the same radius.
    static SplitGeometry reflected(double radius, double theta_in_upper_left);
};

/// P(t,y) = (1/pi) y/(y^2 + t^2).
double poisson_kernel(double t, double y);

/// P1 = min(P(t,y), P(delta,y)): the flattened part of the kernel.
double p1(double t, double y, double delta);

/// P2 = P - P(delta,y) on |t| < delta, zero outside; P1 + P2 = P exactly.
double p2(double t, double y, double delta);

/// phi_y(a) = -2a d/da P1(a,y) = (4/pi) a^2 y/(y^2+a^2)^2 on a > delta.
double phi(double a, double y, double delta);

/// Right-limit value of phi at a = delta (for plotting; the open-domain API
/// rejects a <= delta).
double phi_at_delta(double y, double delta);

struct PhiMass {
    double closed_form; // 2 delta P(delta,y) + 1 - (2/pi) atan(delta/y)
    double quadrature;  // independent integral of phi over (delta, inf)
    double deficit;     // 1 - mass, kept in a cancellation-free form
};

/// Total mass of phi on (delta, inf); strictly below 1. The margin to 1 can
/// sit far below an ulp of 1, so the strict bound is carried by `deficit`
/// (always positive) rather than by closed_form, which may round to 1.
PhiMass phi_mass(double y, double delta);

/// Quadrature residual of the layer-cake identity
/// P1(t,y) = int_{max(delta,|t|)}^inf (1/2a) phi_y(a) da
/// (the integral telescopes to P1 analytically; the returned value is the
/// quadrature-vs-closed-form gap).
double decomp_residual(double t, double y, double delta);

struct SplitConvolutions {
    double g1; // quadrature of P1 against f
    double g2; // closed form of P2 against f over |x_star - t| < delta
};

/// Convolutions of the two kernel parts with a nonnegative simple function,
/// evaluated at (x_star, y_star); g1 + g2 reproduces the Poisson transform.
SplitConvolutions split_convolutions(const SimpleFunction& f, const SplitGeometry& geom);

/// ||f||_1 / (2 pi lambda2): above this radius g2 cannot exceed lambda2.
double p2_threshold_radius(double f_l1_norm, double lambda2);

} // namespace angmax
