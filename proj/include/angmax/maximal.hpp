#pragma once

#include "angmax/geometry.hpp"
#include "angmax/simple_function.hpp"
#include "angmax/transforms.hpp"

#include <string>
#include <vector>

namespace angmax {

/// Sampling policy for the sup over an open angular interval. The coarse
/// pass lays midpoint samples across the sector; geometric boundary layers
/// approach each endpoint down to a relative offset of 1e-8 (endpoints are
/// never evaluated); ternary refinement then polishes the bracket around the
/// best sample. Reported maxima are lower bounds of the true supremum.
struct AngleSearchConfig {
    int coarse_count = 512;
    int boundary_layers = 24;
    int refine_iters = 40;

    void validate() const;
    static constexpr double kBoundaryOffset = 1e-8; // relative to sector span
};

struct AngularMax {
    double value;
    double theta;
};

/// max over sampled theta of |T f(rho e^{i theta})| plus an achieving angle.
AngularMax angular_max(TransformKind kind, const SimpleFunction& f, double rho,
                       const Sector& sector, const AngleSearchConfig& cfg = {});

/// Laplace-only closed-form path for the exponential companion family.
AngularMax angular_max(TransformKind kind, const ExpFunction& f, double rho,
                       const Sector& sector, const AngleSearchConfig& cfg = {});

/// Samples of an angular maximal function over a radial grid, with the
/// maximizing angle recorded per node.
struct RadialProfile {
    RadialGrid grid;
    std::vector<double> values;
    std::vector<double> arg_theta;
    TransformKind kind;
    Sector sector;

    std::string to_csv() const; // columns rho,value,theta_argmax
};

RadialProfile max_profile(TransformKind kind, const SimpleFunction& f, const RadialGrid& grid,
                          const Sector& sector, const AngleSearchConfig& cfg = {}, int jobs = 1);
RadialProfile max_profile(TransformKind kind, const ExpFunction& f, const RadialGrid& grid,
                          const Sector& sector, const AngleSearchConfig& cfg = {}, int jobs = 1);

/// Level-set measures mu(lambda) = |{rho in window : profile(rho) > lambda}|
/// with linear interpolation of the crossing points, and the weak norm
/// sup over sampled lambda of lambda*mu(lambda).
struct DistributionSummary {
    std::vector<double> lambdas;  // descending
    std::vector<double> measures;
    double weak_norm;
};

DistributionSummary distribution(const RadialProfile& profile, std::vector<double> lambdas);

enum class TailPolicy { Ignore, Report };

struct ProfileNorm {
    double value;         // trapezoid Lp norm over the grid window
    double tail_power;    // estimated integral of profile^p beyond rho_max
    double tail_fraction; // tail_power / (window power + tail_power)
};

/// Trapezoid Lp norm of the profile over [rho_min, rho_max]; max for p=inf.
/// TailPolicy::Report adds an upper-tail estimate that models the profile as
/// decaying like value_last * rho_max / rho past the window.
ProfileNorm lp_norm_profile(const RadialProfile& profile, double p,
                            TailPolicy tail = TailPolicy::Ignore);

/// Non-centered Hardy-Littlewood maximal function of a nonnegative simple
/// function: sup of interval averages over all [a,b] containing x. Exact:
/// the optimum is attained with endpoints among the breakpoints and x, or in
/// the shrink-to-x limit.
double hl_maximal(const SimpleFunction& f, double x);

} // namespace angmax
