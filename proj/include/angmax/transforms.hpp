#pragma once

#include "angmax/geometry.hpp"
#include "angmax/simple_function.hpp"

namespace angmax {

enum class TransformKind {
    Poisson,        // harmonic extension to the upper half-plane (0, pi)
    Stieltjes,      // Cauchy-type integral, analytic on the cut plane (0, 2*pi)
    LaplaceRay,     // Laplace transform on rays of the right half-plane
    CauchyIntegral, // (1/2*pi*i) * Stieltjes, upper half-plane
    Hilbert         // boundary principal value only
};

const char* kind_name(TransformKind k);
TransformKind kind_from_name(const std::string& name);

/// Natural sector of the transform's range; Hilbert has none (boundary).
Sector natural_sector(TransformKind k);

/// P f(x+iy) = (1/pi) int_0^inf y/((t-x)^2 + y^2) f(t) dt, evaluated exactly
/// per piece via arctangent antiderivatives. Requires y > 0.
complexd poisson(const SimpleFunction& f, double x, double y);

/// St f(z) = int_0^inf f(t)/(t-z) dt for z off the support segment. Each
/// piece contributes v_i * Log((t_i - z)/(t_{i-1} - z)); the per-piece
/// argument increment is < pi, so principal logs are branch-safe.
complexd stieltjes(const SimpleFunction& f, complexd z);

/// L f(rho e^{i theta}) = int_0^inf f(t) e^{-zt} dt with |theta| < pi/2,
/// computed per piece as e^{-z t_{i-1}} * dt * em1(z*dt) where
/// em1(w) = (1 - e^{-w})/w switches to a 6-term series for |w| < 1e-4.
complexd laplace_ray(const SimpleFunction& f, double rho, double theta);

complexd laplace_simple(const SimpleFunction& f, complexd z);

/// Closed form amplitude/(z + c) for Re z > -c.
complexd laplace_exp(const ExpFunction& g, complexd z);

/// H f(x) = (1/pi) p.v. int f(t)/(x-t) dt; exact per-piece logarithms.
/// x must not be a breakpoint.
complexd hilbert(const SimpleFunction& f, double x);

/// (1/(2*pi*i)) St f(z) for Im z != 0.
complexd cauchy_integral(const SimpleFunction& f, complexd z);

/// (1 - exp(-w))/w with the small-|w| series path; exposed for reuse and for
/// direct testing of the cancellation threshold.
complexd em1_over(complexd w);

} // namespace angmax
