#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angmax/maximal.hpp"
#include "angmax/family.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace angmax;
using testutil::Rng;
using testutil::random_simple;

namespace {

const SimpleFunction kInd = SimpleFunction::indicator(0.0, 1.0);
const double kInf = std::numeric_limits<double>::infinity();

/// Brute-force oracle: dense theta grid plus geometric boundary layers,
/// independent of the search implementation.
double brute_force_max(TransformKind kind, const SimpleFunction& f, double rho,
                       const Sector& sector, int n = 100000)
{
    auto value = [&](double theta) {
        const double x = rho * std::cos(theta), y = rho * std::sin(theta);
        switch (kind) {
            case TransformKind::Poisson: return std::abs(poisson(f, x, y));
            case TransformKind::Stieltjes: return std::abs(stieltjes(f, {x, y}));
            default: return std::abs(laplace_simple(f, {x, y}));
        }
    };
    double best = 0.0;
    const double span = sector.span();
    for (int j = 0; j < n; ++j)
        best = std::max(best, value(sector.theta_lo + span * (j + 0.5) / n));
    for (int k = 1; k <= 40; ++k) {
        // same admissible floor as the search policy: 1e-8 of the span
        const double off = span * std::pow(10.0, -7.0 * k / 40.0 - 1.0);
        best = std::max(best, value(sector.theta_lo + off));
        best = std::max(best, value(sector.theta_hi - off));
    }
    return best;
}

} // namespace

TEST_CASE("angular_max: poisson boundary limit at an interior support point")
{
    const AngularMax m =
        angular_max(TransformKind::Poisson, kInd, 0.5, Sector::upper_half());
    CHECK(std::fabs(m.value - 1.0) < 1e-3);
    CHECK(m.theta > 0.0);
    CHECK(m.theta < kPi);
    const double oracle = brute_force_max(TransformKind::Poisson, kInd, 0.5,
                                          Sector::upper_half(), 20000);
    CHECK(m.value >= oracle - 1e-9);
}

TEST_CASE("angular_max: zero function and argument validation")
{
    const SimpleFunction zero({0.0, 1.0}, {complexd{0.0, 0.0}});
    CHECK(angular_max(TransformKind::LaplaceRay, zero, 3.0, Sector::right_half()).value == 0.0);
    CHECK_THROWS_AS(angular_max(TransformKind::Poisson, kInd, 0.0, Sector::upper_half()),
                    std::domain_error);
    CHECK_THROWS_AS(angular_max(TransformKind::Hilbert, kInd, 1.0, Sector::upper_half()),
                    std::domain_error);
    // sector must sit inside the transform's natural sector
    CHECK_THROWS_AS(angular_max(TransformKind::LaplaceRay, kInd, 1.0, Sector::upper_half()),
                    std::domain_error);
}

TEST_CASE("angular_max: stieltjes matches the brute-force grid oracle")
{
    const AngularMax m =
        angular_max(TransformKind::Stieltjes, kInd, 2.0, Sector::cut_plane());
    const double oracle =
        brute_force_max(TransformKind::Stieltjes, kInd, 2.0, Sector::cut_plane());
    CHECK(std::fabs(m.value - oracle) <= 1e-6 * oracle);
}

TEST_CASE("max_profile: laplace of exp1 matches (1+rho^2)^{-1/2}")
{
    const ExpFunction g = exp_fixture("exp1");
    const RadialGrid grid(1e-2, 1e2, 128);
    const RadialProfile prof =
        max_profile(TransformKind::LaplaceRay, g, grid, Sector::right_half());
    const auto nodes = grid.nodes();
    for (int i = 0; i < grid.count; ++i) {
        const double expect = 1.0 / std::sqrt(1.0 + nodes[i] * nodes[i]);
        CHECK(std::fabs(prof.values[i] - expect) < 1e-4);
    }
}

TEST_CASE("max_profile: poisson contraction and stieltjes decay")
{
    const RadialGrid grid(1e-2, 1e2, 96);
    const RadialProfile pp =
        max_profile(TransformKind::Poisson, kInd, grid, Sector::upper_half());
    for (double v : pp.values) CHECK(v <= 1.0 + 1e-12);

    const RadialGrid far(2.0, 10.0, 48);
    const RadialProfile ps =
        max_profile(TransformKind::Stieltjes, kInd, far, Sector::cut_plane());
    for (int i = 1; i < far.count; ++i) CHECK(ps.values[i] <= ps.values[i - 1] * (1.0 + 1e-9));
    // spot check against the oracle
    const auto nodes = far.nodes();
    for (int i : {0, far.count / 2, far.count - 1}) {
        const double oracle =
            brute_force_max(TransformKind::Stieltjes, kInd, nodes[i], Sector::cut_plane(), 20000);
        CHECK(std::fabs(ps.values[i] - oracle) <= 1e-6 * oracle);
    }
}

TEST_CASE("distribution: constant profile on a window")
{
    RadialProfile prof{RadialGrid(1.0, 3.0, 32), std::vector<double>(32, 2.0),
                       std::vector<double>(32, 0.5), TransformKind::Poisson,
                       Sector::upper_half()};
    const DistributionSummary one = distribution(prof, {1.0});
    CHECK(one.measures[0] == doctest::Approx(2.0).epsilon(1e-12));
    const DistributionSummary three = distribution(prof, {3.0});
    CHECK(three.measures[0] == 0.0);
    CHECK_THROWS_AS(distribution(prof, {}), std::invalid_argument);
    CHECK_THROWS_AS(distribution(prof, {-1.0}), std::invalid_argument);
}

TEST_CASE("distribution: monotone measures, weak norm cap on the indicator fixture")
{
    const RadialGrid grid(1e-3, 1e3, 512);
    const RadialProfile prof =
        max_profile(TransformKind::Poisson, kInd, grid, Sector::upper_half());
    const double prof_max = *std::max_element(prof.values.begin(), prof.values.end());

    std::vector<double> lambdas;
    for (int i = 0; i < 64; ++i) lambdas.push_back(prof_max * std::pow(1e-3, 1.0 - i / 63.0));
    const DistributionSummary d = distribution(prof, lambdas);

    for (std::size_t k = 1; k < d.lambdas.size(); ++k) {
        CHECK(d.lambdas[k] < d.lambdas[k - 1]);
        CHECK(d.measures[k] >= d.measures[k - 1] - 1e-12); // mu grows as lambda drops
    }
    for (std::size_t k = 0; k < d.lambdas.size(); ++k) {
        CHECK(d.weak_norm >= d.lambdas[k] * d.measures[k] - 1e-15);
        CHECK(d.lambdas[k] * d.measures[k] <= 8.0 * kInd.lp_norm(1.0));
    }
}

TEST_CASE("lp_norm_profile: zero profile, exp fixture norm, tail report")
{
    RadialProfile zero{RadialGrid(1e-2, 1e2, 16), std::vector<double>(16, 0.0),
                       std::vector<double>(16, 0.5), TransformKind::LaplaceRay,
                       Sector::right_half()};
    CHECK(lp_norm_profile(zero, 2.0).value == 0.0);
    CHECK(lp_norm_profile(zero, kInf).value == 0.0);

    const ExpFunction g = exp_fixture("exp1");
    const RadialGrid grid(1e-3, 1e3, 1024);
    const RadialProfile prof =
        max_profile(TransformKind::LaplaceRay, g, grid, Sector::right_half());
    const ProfileNorm n2 = lp_norm_profile(prof, 2.0, TailPolicy::Report);
    CHECK(std::fabs(n2.value - std::sqrt(kPi / 2.0)) < 1e-2);
    CHECK(n2.tail_power > 0.0);
    CHECK(n2.tail_fraction < 0.01);

    CHECK_THROWS_AS(lp_norm_profile(prof, 0.5), std::domain_error);
}

TEST_CASE("profile dilation: norms scale by s^{-1/p}")
{
    Rng rng(909);
    const SimpleFunction f = random_simple(rng, 4, 3.0, 2.0, true);
    const double s = 2.0;
    const RadialGrid grid(1e-3, 1e3, 512);
    // matched windows turn the covariance into an exact node-by-node law
    const RadialGrid scaled(s * grid.rho_min, s * grid.rho_max, grid.count);
    const RadialProfile base =
        max_profile(TransformKind::Poisson, f, scaled, Sector::upper_half());
    const RadialProfile dil =
        max_profile(TransformKind::Poisson, f.dilate(s), grid, Sector::upper_half());
    for (double p : {2.0, 3.0}) {
        const double lhs = lp_norm_profile(dil, p).value;
        const double rhs = std::pow(s, -1.0 / p) * lp_norm_profile(base, p).value;
        CHECK(std::fabs(lhs - rhs) <= 1e-6 * rhs);
    }
}

TEST_CASE("hl_maximal: exact values on the indicator")
{
    CHECK(hl_maximal(kInd, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(hl_maximal(kInd, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(hl_maximal(kInd, -1.0) == doctest::Approx(0.5).epsilon(1e-15));

    const SimpleFunction neg({0.0, 1.0}, {complexd{-1.0, 0.0}});
    CHECK_THROWS_AS(hl_maximal(neg, 0.5), std::domain_error);
    const SimpleFunction cplx({0.0, 1.0}, {complexd{1.0, 1.0}});
    CHECK_THROWS_AS(hl_maximal(cplx, 0.5), std::domain_error);
}

TEST_CASE("hl_maximal: dominates random interval averages and the dense-scan oracle")
{
    Rng rng(1010);
    for (int trial = 0; trial < 20; ++trial) {
        const SimpleFunction f = random_simple(rng, 5, 4.0, 2.0, true);
        const double x = rng.uniform(-1.0, 5.0);
        const double hl = hl_maximal(f, x);

        std::vector<double> cum(f.breakpoints().size(), 0.0);
        for (int i = 0; i < f.piece_count(); ++i)
            cum[i + 1] = cum[i] + f.values()[i].real() *
                                      (f.breakpoints()[i + 1] - f.breakpoints()[i]);
        auto F = [&](double t) {
            const auto& bp = f.breakpoints();
            if (t <= bp.front()) return 0.0;
            if (t >= bp.back()) return cum.back();
            auto it = std::upper_bound(bp.begin(), bp.end(), t);
            auto i = static_cast<std::size_t>(it - bp.begin()) - 1;
            return cum[i] + f.values()[i].real() * (t - bp[i]);
        };

        double dense = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double a = x - std::exp(rng.uniform(-6.0, 2.0));
            const double b = x + std::exp(rng.uniform(-6.0, 2.0));
            const double avg = (F(b) - F(a)) / (b - a);
            CHECK(avg <= hl + 1e-12);
            dense = std::max(dense, avg);
        }
        CHECK(hl >= dense - 1e-12);
    }
}

TEST_CASE("search convergence: nested sample sets are monotone, doubling is stable")
{
    Rng rng(1111);
    const SimpleFunction f = random_simple(rng, 5, 3.0, 2.0, true);

    for (TransformKind kind :
         {TransformKind::Poisson, TransformKind::Stieltjes, TransformKind::LaplaceRay}) {
        const Sector sector = natural_sector(kind);
        for (double rho : {0.3, 1.7, 12.0}) {
            AngleSearchConfig c0;
            c0.refine_iters = 0;

            // tripling the midpoint grid keeps every old sample
            AngleSearchConfig c1 = c0;
            c1.coarse_count *= 3;
            // refining the boundary ladder keeps every old rung
            AngleSearchConfig c2 = c0;
            c2.boundary_layers = 2 * c0.boundary_layers - 1;

            const double v0 = angular_max(kind, f, rho, sector, c0).value;
            const double v1 = angular_max(kind, f, rho, sector, c1).value;
            const double v2 = angular_max(kind, f, rho, sector, c2).value;
            CHECK(v1 >= v0 * (1.0 - 1e-15));
            CHECK(v2 >= v0 * (1.0 - 1e-15));

            AngleSearchConfig full;
            AngleSearchConfig doubled;
            doubled.coarse_count *= 2;
            doubled.boundary_layers *= 2;
            const double a = angular_max(kind, f, rho, sector, full).value;
            const double b = angular_max(kind, f, rho, sector, doubled).value;
            CHECK(std::fabs(a - b) <= 1e-6 * std::max(a, b));
        }
    }
}

TEST_CASE("sublinearity and homogeneity of angular_max")
{
    Rng rng(1212);
    for (int trial = 0; trial < 8; ++trial) {
        const SimpleFunction f = random_simple(rng, 4, 3.0, 2.0);
        const SimpleFunction g = random_simple(rng, 4, 3.0, 2.0);
        const SimpleFunction sum = SimpleFunction::combine({1, 0}, f, {1, 0}, g);
        const complexd c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const SimpleFunction cf = SimpleFunction::combine(c, f, {0, 0}, f);
        const double rho = std::exp(rng.uniform(-2.0, 2.0));

        for (TransformKind kind :
             {TransformKind::Poisson, TransformKind::Stieltjes, TransformKind::LaplaceRay}) {
            const Sector sector = natural_sector(kind);
            const double vf = angular_max(kind, f, rho, sector).value;
            const double vg = angular_max(kind, g, rho, sector).value;
            const double vs = angular_max(kind, sum, rho, sector).value;
            CHECK(vs <= vf + vg + 1e-9);

            const double vcf = angular_max(kind, cf, rho, sector).value;
            CHECK(std::fabs(vcf - std::abs(c) * vf) <= 1e-12 * (1.0 + std::abs(c) * vf));
        }
    }
}

TEST_CASE("dilation covariance of the maximal operators")
{
    Rng rng(1313);
    const SimpleFunction f = random_simple(rng, 4, 3.0, 2.0, true);
    const double s = 2.5;
    for (double rho : {0.2, 1.0, 7.0}) {
        // alpha = 0 for Poisson/Stieltjes, 1 for Laplace
        const double p0 =
            angular_max(TransformKind::Poisson, f.dilate(s), rho, Sector::upper_half()).value;
        const double p1 =
            angular_max(TransformKind::Poisson, f, s * rho, Sector::upper_half()).value;
        CHECK(std::fabs(p0 - p1) <= 1e-6 * std::max(p0, p1));

        const double s0 =
            angular_max(TransformKind::Stieltjes, f.dilate(s), rho, Sector::cut_plane()).value;
        const double s1 =
            angular_max(TransformKind::Stieltjes, f, s * rho, Sector::cut_plane()).value;
        CHECK(std::fabs(s0 - s1) <= 1e-6 * std::max(s0, s1));

        const double l0 =
            angular_max(TransformKind::LaplaceRay, f.dilate(s), rho, Sector::right_half()).value;
        const double l1 =
            angular_max(TransformKind::LaplaceRay, f, rho / s, Sector::right_half()).value / s;
        CHECK(std::fabs(l0 - l1) <= 1e-6 * std::max(l0, l1));
    }
}

TEST_CASE("max_profile is deterministic across thread counts")
{
    Rng rng(1414);
    const SimpleFunction f = random_simple(rng, 4, 3.0, 2.0, true);
    const RadialGrid grid(1e-2, 1e2, 64);
    const RadialProfile a =
        max_profile(TransformKind::Poisson, f, grid, Sector::upper_half(), {}, 1);
    const RadialProfile b =
        max_profile(TransformKind::Poisson, f, grid, Sector::upper_half(), {}, 4);
    CHECK(a.values == b.values);
    CHECK(a.arg_theta == b.arg_theta);
}

TEST_CASE("RadialProfile CSV emission")
{
    // 2^-23 is exact in binary and in its 17-digit decimal form
    RadialProfile prof{RadialGrid(0.5, 2.0, 3), {1.0, 0.25, 0x1.0p-23},
                       {0.1, 0.2, 0.3}, TransformKind::Poisson, Sector::upper_half()};
    const std::string csv = prof.to_csv();
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "rho,value,theta_argmax");
    std::getline(ss, line);
    CHECK(line.find("0.50000000000000000") == 0);
    std::getline(ss, line);
    std::getline(ss, line);
    CHECK(line.find("1.1920928955078125e-07") != std::string::npos);
}
