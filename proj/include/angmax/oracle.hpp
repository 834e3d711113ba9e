#pragma once

#include "angmax/transforms.hpp"

namespace angmax {

/// Slow reference path: evaluates the defining integral of the transform by
/// adaptive Gauss-Kronrod quadrature, independent of the closed forms in
/// transforms.cpp.
///
/// The evaluation point is packed into a complex number: Poisson reads it as
/// x + iy, Stieltjes/Cauchy as z, LaplaceRay as z = rho e^{i theta}, Hilbert
/// as x (imaginary part must be zero). Hilbert uses symmetric excision with
/// Richardson extrapolation toward excision radius zero.
complexd quad_oracle(TransformKind kind, const SimpleFunction& f, complexd point,
                     double abs_tol = 1e-10);

} // namespace angmax
