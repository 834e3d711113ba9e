#include "angmax/maximal.hpp"

#include "angmax/format.hpp"
#include "angmax/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace angmax {

namespace {

void check_sector(TransformKind kind, const Sector& sector)
{
    const Sector natural = natural_sector(kind); // throws for Hilbert
    if (sector.theta_lo < natural.theta_lo - 1e-15 || sector.theta_hi > natural.theta_hi + 1e-15)
        throw std::domain_error("angular_max: sector exceeds the transform's natural sector");
}

/// Scan angles in ascending order: rising boundary layers near theta_lo,
/// coarse midpoints, falling boundary layers near theta_hi.
std::vector<double> scan_angles(const Sector& sector, const AngleSearchConfig& cfg)
{
    const double lo = sector.theta_lo, span = sector.span();
    const int n = cfg.coarse_count, layers = cfg.boundary_layers;

    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(n) + 2 * layers);

    const double r1 = 0.25 / n;
    const double rl = AngleSearchConfig::kBoundaryOffset;
    auto layer_offset = [&](int k) {
        if (layers == 1) return rl;
        return r1 * std::pow(rl / r1, static_cast<double>(k) / (layers - 1));
    };

    for (int k = layers - 1; k >= 0; --k) angles.push_back(lo + span * layer_offset(k));
    for (int j = 0; j < n; ++j) angles.push_back(lo + span * (j + 0.5) / n);
    for (int k = 0; k < layers; ++k) angles.push_back(lo + span * (1.0 - layer_offset(k)));
    return angles;
}

struct SimpleData {
    std::vector<double> re, im;
    kernels::FuncView view;

    explicit SimpleData(const SimpleFunction& f)
    {
        const auto& vals = f.values();
        re.resize(vals.size());
        im.resize(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            re[i] = vals[i].real();
            im[i] = vals[i].imag();
        }
        view = kernels::FuncView{f.breakpoints().data(), re.data(), im.data(),
                                 static_cast<int>(vals.size())};
    }
};

using BatchEval = std::function<void(double rho, const double* thetas, int count, double* out)>;
using PointEval = std::function<double(double rho, double theta)>;

AngularMax search(double rho, const Sector& sector, const AngleSearchConfig& cfg,
                  const BatchEval& batch, const PointEval& point)
{
    cfg.validate();
    const std::vector<double> angles = scan_angles(sector, cfg);
    std::vector<double> vals(angles.size());
    batch(rho, angles.data(), static_cast<int>(angles.size()), vals.data());

    std::size_t best = 0;
    for (std::size_t j = 1; j < vals.size(); ++j)
        if (vals[j] > vals[best]) best = j;

    double best_val = vals[best];
    double best_theta = angles[best];

    // ternary refinement on the bracketing samples around the best one
    double a = (best > 0) ? angles[best - 1] : angles[best];
    double b = (best + 1 < angles.size()) ? angles[best + 1] : angles[best];
    for (int it = 0; it < cfg.refine_iters && b - a > 0.0; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        const double v1 = point(rho, m1);
        const double v2 = point(rho, m2);
        if (v1 > best_val) { best_val = v1; best_theta = m1; }
        if (v2 > best_val) { best_val = v2; best_theta = m2; }
        if (v1 < v2)
            a = m1;
        else
            b = m2;
    }
    return {best_val, best_theta};
}

double point_eval_simple(TransformKind kind, const SimpleFunction& f, double rho, double theta)
{
    const double x = rho * std::cos(theta);
    const double y = rho * std::sin(theta);
    switch (kind) {
        case TransformKind::Poisson: return std::abs(poisson(f, x, y));
        case TransformKind::Stieltjes: return std::abs(stieltjes(f, {x, y}));
        case TransformKind::LaplaceRay: return std::abs(laplace_simple(f, {x, y}));
        case TransformKind::CauchyIntegral: return std::abs(stieltjes(f, {x, y})) / (2.0 * kPi);
        case TransformKind::Hilbert: break;
    }
    throw std::domain_error("angular_max: Hilbert transform has no angular range");
}

BatchEval batch_eval_simple(TransformKind kind, const SimpleData& data)
{
    switch (kind) {
        case TransformKind::Poisson:
            return [&data](double rho, const double* th, int m, double* out) {
                kernels::poisson_abs_batch(data.view, rho, th, m, out);
            };
        case TransformKind::Stieltjes:
            return [&data](double rho, const double* th, int m, double* out) {
                kernels::stieltjes_abs_batch(data.view, rho, th, m, out);
            };
        case TransformKind::CauchyIntegral:
            return [&data](double rho, const double* th, int m, double* out) {
                kernels::stieltjes_abs_batch(data.view, rho, th, m, out);
                for (int j = 0; j < m; ++j) out[j] /= 2.0 * kPi;
            };
        case TransformKind::LaplaceRay:
            return [&data](double rho, const double* th, int m, double* out) {
                kernels::laplace_abs_batch(data.view, rho, th, m, out);
            };
        case TransformKind::Hilbert: break;
    }
    throw std::domain_error("angular_max: Hilbert transform has no angular range");
}

} // namespace

void AngleSearchConfig::validate() const
{
    if (coarse_count < 8) throw std::invalid_argument("AngleSearchConfig: coarse_count >= 8");
    if (boundary_layers < 1) throw std::invalid_argument("AngleSearchConfig: boundary_layers >= 1");
    if (refine_iters < 0) throw std::invalid_argument("AngleSearchConfig: refine_iters >= 0");
}

AngularMax angular_max(TransformKind kind, const SimpleFunction& f, double rho,
                       const Sector& sector, const AngleSearchConfig& cfg)
{
    if (!(rho > 0.0)) throw std::domain_error("angular_max: rho must be positive");
    check_sector(kind, sector);
    SimpleData data(f);
    return search(rho, sector, cfg, batch_eval_simple(kind, data),
                  [&](double r, double t) { return point_eval_simple(kind, f, r, t); });
}

AngularMax angular_max(TransformKind kind, const ExpFunction& f, double rho,
                       const Sector& sector, const AngleSearchConfig& cfg)
{
    if (kind != TransformKind::LaplaceRay)
        throw std::domain_error("angular_max: exponential inputs only support the Laplace kind");
    if (!(rho > 0.0)) throw std::domain_error("angular_max: rho must be positive");
    check_sector(kind, sector);

    auto value = [&f](double rho_, double theta) {
        const complexd z{rho_ * std::cos(theta), rho_ * std::sin(theta)};
        return std::abs(f.amplitude) / std::abs(z + complexd{f.rate, 0.0});
    };
    auto batch = [&value](double rho_, const double* th, int m, double* out) {
        for (int j = 0; j < m; ++j) out[j] = value(rho_, th[j]);
    };
    return search(rho, sector, cfg, batch, value);
}

namespace {

template <typename F>
RadialProfile profile_impl(TransformKind kind, const F& f, const RadialGrid& grid,
                           const Sector& sector, const AngleSearchConfig& cfg, int jobs)
{
    RadialProfile prof{grid, std::vector<double>(grid.count), std::vector<double>(grid.count),
                       kind, sector};
    const std::vector<double> nodes = grid.nodes();

    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const AngularMax m = angular_max(kind, f, nodes[i], sector, cfg);
            prof.values[i] = m.value;
            prof.arg_theta[i] = m.theta;
        }
    };

    const int n_threads = std::max(1, std::min(jobs, grid.count));
    if (n_threads == 1) {
        work(0, grid.count);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (grid.count + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const int lo = t * chunk, hi = std::min(grid.count, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return prof;
}

} // namespace

RadialProfile max_profile(TransformKind kind, const SimpleFunction& f, const RadialGrid& grid,
                          const Sector& sector, const AngleSearchConfig& cfg, int jobs)
{
    return profile_impl(kind, f, grid, sector, cfg, jobs);
}

RadialProfile max_profile(TransformKind kind, const ExpFunction& f, const RadialGrid& grid,
                          const Sector& sector, const AngleSearchConfig& cfg, int jobs)
{
    return profile_impl(kind, f, grid, sector, cfg, jobs);
}

std::string RadialProfile::to_csv() const
{
    std::string out = "rho,value,theta_argmax\n";
    const std::vector<double> nodes = grid.nodes();
    for (int i = 0; i < grid.count; ++i) {
        out += format_double(nodes[i]);
        out += ',';
        out += format_double(values[i]);
        out += ',';
        out += format_double(arg_theta[i]);
        out += '\n';
    }
    return out;
}

DistributionSummary distribution(const RadialProfile& profile, std::vector<double> lambdas)
{
    if (lambdas.empty()) throw std::invalid_argument("distribution: empty lambda list");
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::invalid_argument("distribution: lambdas must be positive");
    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());

    const std::vector<double> nodes = profile.grid.nodes();
    const auto& v = profile.values;

    DistributionSummary out;
    out.lambdas = lambdas;
    out.measures.resize(lambdas.size());
    out.weak_norm = 0.0;

    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double lam = lambdas[k];
        double mu = 0.0;
        for (int i = 0; i + 1 < profile.grid.count; ++i) {
            const double h = nodes[i + 1] - nodes[i];
            const bool a = v[i] > lam, b = v[i + 1] > lam;
            if (a && b) {
                mu += h;
            } else if (a != b) {
                const double frac = (lam - v[i]) / (v[i + 1] - v[i]); // crossing position
                mu += a ? h * frac : h * (1.0 - frac);
            }
        }
        out.measures[k] = mu;
        out.weak_norm = std::max(out.weak_norm, lam * mu);
    }
    return out;
}

ProfileNorm lp_norm_profile(const RadialProfile& profile, double p, TailPolicy tail)
{
    const auto& v = profile.values;
    const std::vector<double> nodes = profile.grid.nodes();

    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : v) m = std::max(m, x);
        return {m, 0.0, 0.0};
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm_profile: p must be >= 1");

    double power = 0.0;
    for (int i = 0; i + 1 < profile.grid.count; ++i) {
        const double h = nodes[i + 1] - nodes[i];
        power += 0.5 * h * (std::pow(v[i], p) + std::pow(v[i + 1], p));
    }

    double tail_power = 0.0;
    if (tail == TailPolicy::Report) {
        // model: value decays like v_last * rho_max / rho past the window
        const double vl = v.back();
        tail_power = (p > 1.0) ? std::pow(vl, p) * profile.grid.rho_max / (p - 1.0)
                               : std::numeric_limits<double>::infinity();
    }
    const double denom = power + tail_power;
    return {std::pow(power, 1.0 / p), tail_power, denom > 0.0 ? tail_power / denom : 0.0};
}

double hl_maximal(const SimpleFunction& f, double x)
{
    if (!f.is_nonnegative())
        throw std::domain_error("hl_maximal: requires a real nonnegative function");

    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    const int n = f.piece_count();

    std::vector<double> cum(bp.size(), 0.0);
    for (int i = 0; i < n; ++i)
        cum[i + 1] = cum[i] + vals[i].real() * (bp[i + 1] - bp[i]);

    auto F = [&](double t) {
        if (t <= bp.front()) return 0.0;
        if (t >= bp.back()) return cum.back();
        auto it = std::upper_bound(bp.begin(), bp.end(), t);
        const auto i = static_cast<std::size_t>(it - bp.begin()) - 1;
        return cum[i] + vals[i].real() * (t - bp[i]);
    };

    std::vector<double> left{x}, right{x};
    for (double t : bp) {
        if (t < x) left.push_back(t);
        if (t > x) right.push_back(t);
    }

    double best = 0.0;
    for (double a : left)
        for (double b : right)
            if (b > a) best = std::max(best, (F(b) - F(a)) / (b - a));

    // shrink-to-x limit: one-sided piece values at x
    for (int i = 0; i < n; ++i) {
        if (x >= bp[i] && x <= bp[i + 1]) best = std::max(best, vals[i].real());
    }
    return best;
}

} // namespace angmax
