#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angmax/verify.hpp"

#include <cmath>

using namespace angmax;
using namespace angmax::verify;

namespace {

RunOptions small_run()
{
    RunOptions opt;
    opt.grid = RadialGrid(1e-3, 1e3, 1024);
    opt.jobs = 2;
    return opt;
}

const double kSqrt2 = 1.4142135623730951;
const double kSqrtPi = 1.7724538509055159;

} // namespace

TEST_CASE("theorem1: ratios positive, dilation orbits agree, reports deterministic")
{
    FunctionFamily fam{FamilyConfig{4, 5, 4.0, 2.0, true, 2024}, {"indicator01"}};
    const Report rep = run_theorem1(fam, small_run(), {1.0, 2.0, 4.0, 8.0});

    CHECK(rep.experiment == "theorem1");
    CHECK(rep.passed());
    CHECK(rep.rows.size() == 20); // 5 members x 4 dilations
    const double k1 = rep.empirical_constants["K1"].get<double>();
    CHECK(k1 > 0.0);
    CHECK(k1 <= kCapK1);

    for (const auto& row : rep.rows) {
        CHECK(row["ratio"].get<double>() >= 0.0);
        CHECK(row["weak_norm"].get<double>() >= 0.0);
    }

    const Report again = run_theorem1(fam, small_run(), {1.0, 2.0, 4.0, 8.0});
    CHECK(rep.to_json() == again.to_json());
    CHECK(rep.rows_csv() == again.rows_csv());
}

TEST_CASE("theorem2: L-infinity endpoint is a contraction")
{
    FunctionFamily fam{FamilyConfig{3, 5, 4.0, 2.0, true, 7}, {"indicator01"}};
    const Report rep = run_theorem2(fam, small_run());
    CHECK(rep.passed());

    for (const auto& row : rep.rows)
        if (row["p"].get<std::string>() == "inf" &&
            row["function"].get<std::string>() == "indicator01")
            CHECK(row["ratio"].get<double>() <= 1.0 + 1e-9);

    CHECK(rep.empirical_constants["2"].get<double>() <= kCapK2at2);
}

TEST_CASE("theorem3: stieltjes ratios finite and recorded per exponent")
{
    FunctionFamily fam{FamilyConfig{3, 5, 4.0, 2.0, false, 9}, {"comb"}};
    const Report rep = run_theorem3(fam, small_run());
    CHECK(rep.passed());
    for (const char* key : {"1.5", "2", "3"}) {
        CHECK(rep.empirical_constants.contains(key));
        CHECK(std::isfinite(rep.empirical_constants[key].get<double>()));
    }
    CHECK_THROWS_AS(run_theorem3(fam, small_run(), {1.0}), std::domain_error);
}

TEST_CASE("theorem4: exp fixture pins K4(2) near sqrt(pi), p=1 stays below 1")
{
    FunctionFamily fam{FamilyConfig{2, 4, 3.0, 2.0, false, 11}, {}};
    const Report rep = run_theorem4(fam, small_run());
    CHECK(rep.passed());

    for (const auto& row : rep.rows) {
        if (row["function"].get<std::string>() == "exp1" && row["p"].get<std::string>() == "2")
            CHECK(row["ratio"].get<double>() == doctest::Approx(kSqrtPi).epsilon(0.01));
        if (row["p"].get<std::string>() == "1")
            CHECK(row["ratio"].get<double>() <= 1.0 + 1e-9);
    }
    CHECK(rep.empirical_constants["2"].get<double>() >= kSqrtPi - 1e-2);
    CHECK_THROWS_AS(run_theorem4(fam, small_run(), {3.0}), std::domain_error);
}

TEST_CASE("ray-hy: sqrt(2) at theta=0 for exp1, exact +-theta symmetry")
{
    FunctionFamily fam{FamilyConfig{2, 4, 3.0, 2.0, true, 13}, {"comb"}};
    const double edge = 0.5 * kPi - 1e-3;
    const Report rep = run_ray_hy(fam, {2.0}, {-edge, -0.5, 0.0, 0.5, edge},
                                  RadialGrid(1e-6, 1e6, 4096), true);
    CHECK(rep.passed()); // includes the symmetry flags

    double ratio0 = 0.0, ratio_edge = 0.0;
    for (const auto& row : rep.rows) {
        if (row.contains("is_max_row")) continue;
        if (row["function"].get<std::string>() != "exp1") continue;
        if (row["theta"].get<double>() == 0.0) ratio0 = row["ratio"].get<double>();
        if (row["theta"].get<double>() == edge) ratio_edge = row["ratio"].get<double>();
    }
    CHECK(ratio0 == doctest::Approx(kSqrt2).epsilon(1e-3));
    CHECK(ratio_edge > ratio0);
    CHECK(ratio_edge == doctest::Approx(kSqrtPi).epsilon(0.01));

    CHECK_THROWS_AS(run_ray_hy(fam, {2.0}, {kPi / 2}, RadialGrid(1e-6, 1e6, 64), false),
                    std::domain_error);
    CHECK_THROWS_AS(run_ray_hy(fam, {3.0}, {0.0}, RadialGrid(1e-6, 1e6, 64), false),
                    std::domain_error);
}

TEST_CASE("cauchy_rep_once: representation reproduces the transform")
{
    const SimpleFunction ind = fixture("indicator01");
    const CauchyRepResult r =
        cauchy_rep_once(ind, {1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e3, 10000);
    CHECK(r.residual <= 1e-4);
    CHECK(r.contour.real() == doctest::Approx(0.6321205588285577).epsilon(1e-6));

    const SimpleFunction zero({0.0, 1.0}, {complexd{0.0, 0.0}});
    const CauchyRepResult z =
        cauchy_rep_once(zero, {1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e3, 2000);
    CHECK(z.residual == 0.0);

    // with a large T the truncation tail is negligible and the composite
    // trapezoid error dominates: doubling nodes divides the residual by ~4
    const double r1 = cauchy_rep_once(ind, {1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e4, 500).residual;
    const double r2 = cauchy_rep_once(ind, {1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e4, 1000).residual;
    CHECK(r2 * 2.0 <= r1);

    CHECK_THROWS_AS(cauchy_rep_once(ind, {-1.0, 0.1}, -0.25 * kPi, 0.25 * kPi, 1e3, 100),
                    std::domain_error);
}

TEST_CASE("run_cauchy_rep: all fixtures within tolerance, doubling reduces")
{
    std::vector<std::pair<std::string, SimpleFunction>> fixtures;
    for (const char* n : {"indicator01", "twobump", "step3"}) fixtures.emplace_back(n, fixture(n));
    const Report rep =
        run_cauchy_rep(fixtures, {1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e3, 10000);
    CHECK(rep.passed());
    for (const auto& row : rep.rows) {
        CHECK(row["residual"].get<double>() <= 1e-4);
        CHECK(row["reduction"].get<double>() >= 2.0);
    }
}

TEST_CASE("identity-sec4: the Cauchy integral equals half of P(I+iH)f")
{
    std::vector<complexd> pts;
    for (double x : {-0.7, 0.35, 0.8, 1.6, 3.1})
        for (double y : {0.4, 0.9, 1.7, 2.6}) pts.emplace_back(x, y);
    const Report rep = run_identity_sec4(fixture("step3"), pts);

    CHECK(rep.passed());
    CHECK(rep.empirical_constants["matching_candidate"].get<std::string>() == "half");
    CHECK(rep.empirical_constants["max_residual_half"].get<double>() <= 1e-4);
    CHECK(rep.empirical_constants["max_residual_full"].get<double>() > 1e-2);
    CHECK(rep.rows.size() == 20);

    const SimpleFunction zero({0.0, 1.0}, {complexd{0.0, 0.0}});
    const Report zrep = run_identity_sec4(zero, {{0.5, 1.0}});
    CHECK(zrep.rows[0]["residual_full"].get<double>() == 0.0);
    CHECK(zrep.rows[0]["residual_half"].get<double>() == 0.0);
}

TEST_CASE("splitting suite: no violations on the seeded family")
{
    FunctionFamily fam{FamilyConfig{4, 5, 4.0, 2.0, true, 17}, {"indicator01"}};
    std::vector<double> radii;
    for (int i = 0; i < 12; ++i) radii.push_back(0.02 * std::pow(1e3, i / 11.0));
    const Report rep = run_splitting_suite(fam, radii, 0.1, small_run());

    CHECK(rep.passed());
    CHECK(rep.empirical_constants["violations"].get<int>() == 0);
    for (const auto& row : rep.rows) {
        CHECK(row["split_ok"].get<bool>());
        CHECK(row["inclusion_ok"].get<bool>());
        CHECK(row["exclusion_ok"].get<bool>());
        CHECK(row["hl_ok"].get<bool>());
        CHECK(row["theta_star"].get<double>() <= 0.5 * kPi + 1e-12);
    }
}

TEST_CASE("lemma1 runner flags nothing on a coarse grid")
{
    const Report rep = run_lemma1(8);
    CHECK(rep.passed());
    CHECK(rep.empirical_constants["decomp_residual_max"].get<double>() <= 1e-8);
}
