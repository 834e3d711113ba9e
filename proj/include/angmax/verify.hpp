#pragma once

#include "angmax/family.hpp"
#include "angmax/geometry.hpp"
#include "angmax/maximal.hpp"
#include "angmax/report.hpp"

#include <complex>
#include <limits>
#include <vector>

namespace angmax::verify {

/// Regression tripwires for the empirical constants, calibrated to roughly
/// twice the maxima observed on the default seed (they are not mathematical
/// claims). A runner that sees a larger ratio flags its report as failed.
inline constexpr double kCapK1 = 8.0;
inline constexpr double kCapK2at2 = 4.0;
inline constexpr double kCapK3at2 = 8.0;
inline constexpr double kCapK4at2 = 2.0;
inline constexpr double kCapK5at2 = 1.8;

struct RunOptions {
    RadialGrid grid = RadialGrid::standard();
    AngleSearchConfig search{};
    int jobs = 1;
};

/// Weak-(1,1) evidence for the angular maximal Poisson transform: for each
/// family member and dilation, the weak norm sup_lambda lambda*mu(lambda)
/// against ||f||_1. Lambda sweep: 64 log-spaced values over three decades
/// below each profile's max. Flags cap breaches and dilation-orbit spread
/// beyond 1e-3 relative.
Report run_theorem1(const FunctionFamily& family, const RunOptions& opt,
                    const std::vector<double>& dilations = {1.0});

/// Lp ratios ||M_P f||_p / ||f||_p for p in ps (p = inf allowed: profile max
/// against ||f||_inf, flagged above 1 + 1e-9).
Report run_theorem2(const FunctionFamily& family, const RunOptions& opt,
                    const std::vector<double>& ps = {1.5, 2.0, 3.0,
                                                     std::numeric_limits<double>::infinity()});

/// Same for the angular maximal Stieltjes transform, p in (1, inf).
Report run_theorem3(const FunctionFamily& family, const RunOptions& opt,
                    const std::vector<double>& ps = {1.5, 2.0, 3.0});

/// Laplace maximal ratios ||M_L f||_{p'} / ||f||_p for p in [1,2]; includes
/// the exp1 fixture when with_exp_fixture (its p = 2 ratio is sqrt(pi)).
Report run_theorem4(const FunctionFamily& family, const RunOptions& opt,
                    const std::vector<double>& ps = {1.0, 1.5, 2.0},
                    bool with_exp_fixture = true);

/// Ray-wise Hausdorff-Young ratios ||L_theta f||_{p'} / ||f||_p over a theta
/// grid; checks the +-theta symmetry for real inputs and records the
/// maximizing angle per (f, p).
Report run_ray_hy(const FunctionFamily& family, const std::vector<double>& ps,
                  const std::vector<double>& thetas, const RadialGrid& norm_grid,
                  bool with_exp_fixture = true);

struct CauchyRepResult {
    std::complex<double> contour;
    std::complex<double> reference;
    double residual;
};

/// Two-ray Cauchy representation of the Laplace transform: composite
/// trapezoid quadrature (exponentially graded toward r = 0) on each ray up
/// to radius T, plus the closed-form tail of the leading O(1/zeta) term when
/// the support starts at 0. The positively oriented sector boundary makes
/// the combination (ray theta1 - ray theta2)/(2 pi i).
CauchyRepResult cauchy_rep_once(const SimpleFunction& f, std::complex<double> z,
                                double theta1, double theta2, double T, int nodes_per_ray);

/// Residuals of the representation across fixtures, at (T, nodes) and at the
/// simultaneously doubled (2T, 2*nodes); flags residuals above tolerance and
/// reduction factors below 2.
Report run_cauchy_rep(const std::vector<std::pair<std::string, SimpleFunction>>& fixtures,
                      std::complex<double> z, double theta1, double theta2, double T,
                      int nodes_per_ray, double tolerance = 1e-4);

/// Decides empirically whether the Cauchy integral equals P(I + iH)f or half
/// of it, by comparing both candidates at the sample points.
Report run_identity_sec4(const SimpleFunction& f, const std::vector<std::complex<double>>& points,
                         double tolerance = 1e-4);

/// Kernel-splitting suite: at each radius of the sweep, locates the
/// maximizing angle, builds the split geometry, and checks g = g1 + g2, the
/// level-set inclusion at lambda/2, the g2 exclusion radius, and domination
/// of g1 by the Hardy-Littlewood maximal function.
Report run_splitting_suite(const FunctionFamily& family, const std::vector<double>& radii,
                           double lambda, const RunOptions& opt);

/// Layer-cake decomposition residuals on an n^3 (t, y, delta) log grid plus
/// positivity/mass checks of phi on an n^2 (y, delta) grid.
Report run_lemma1(int n = 50);

} // namespace angmax::verify
