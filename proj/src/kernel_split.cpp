#include "angmax/kernel_split.hpp"

#include "angmax/geometry.hpp"
#include "angmax/quadrature.hpp"
#include "angmax/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace angmax {

SplitGeometry::SplitGeometry(double radius, double theta)
{
    if (!(radius > 0.0)) throw std::invalid_argument("SplitGeometry: R must be positive");
    if (!(theta > 0.0) || !(theta <= 0.5 * kPi + 1e-15))
        throw std::invalid_argument("SplitGeometry: theta_star must lie in (0, pi/2]");
    R = radius;
    theta_star = theta;
    y_star = R * std::sin(theta);
    // delta = R(1 - cos theta) written without the cancellation
    const double s = std::sin(0.5 * theta);
    delta = 2.0 * R * s * s;
    x_star = R - delta;
    if (x_star < 0.0) x_star = 0.0;
}

SplitGeometry SplitGeometry::reflected(double radius, double theta_in_upper_left)
{
    if (!(theta_in_upper_left >= 0.5 * kPi) || !(theta_in_upper_left < kPi))
        throw std::invalid_argument("SplitGeometry::reflected: theta must lie in [pi/2, pi)");
    return SplitGeometry(radius, kPi - theta_in_upper_left);
}

double poisson_kernel(double t, double y)
{
    if (!(y > 0.0)) throw std::domain_error("poisson_kernel: y must be positive");
    return y / (kPi * (y * y + t * t));
}

double p1(double t, double y, double delta)
{
    if (!(delta > 0.0)) throw std::domain_error("p1: delta must be positive");
    return std::min(poisson_kernel(t, y), poisson_kernel(delta, y));
}

double p2(double t, double y, double delta)
{
    if (!(delta > 0.0)) throw std::domain_error("p2: delta must be positive");
    if (std::fabs(t) >= delta) {
        (void)poisson_kernel(t, y); // validate y
        return 0.0;
    }
    return poisson_kernel(t, y) - poisson_kernel(delta, y);
}

double phi(double a, double y, double delta)
{
    if (!(y > 0.0) || !(delta > 0.0)) throw std::domain_error("phi: need y > 0 and delta > 0");
    if (!(a > delta)) throw std::domain_error("phi: defined on a > delta only");
    const double d = y * y + a * a;
    return (4.0 / kPi) * a * a * y / (d * d);
}

double phi_at_delta(double y, double delta)
{
    if (!(y > 0.0) || !(delta > 0.0)) throw std::domain_error("phi_at_delta: invalid inputs");
    const double d = y * y + delta * delta;
    return (4.0 / kPi) * delta * delta * y / (d * d);
}

namespace {

/// Adaptive quadrature of w(a) phi_y(a) over (lo, a_max], pre-split per
/// decade and at the curvature scale a ~ y.
double phi_integral(const std::function<double(double)>& weight, double lo, double a_max,
                    double y)
{
    std::vector<double> splits;
    splits.push_back(y);
    for (double s = lo * 10.0; s < a_max; s *= 10.0) splits.push_back(s);

    auto integrand = [&](double a) {
        const double d = y * y + a * a;
        return weight(a) * (4.0 / kPi) * a * a * y / (d * d);
    };
    return integrate_real(integrand, lo, a_max, 1e-11, splits, 20000);
}

double phi_cutoff(double lo, double y) { return std::max(2.0 * lo, y) * 1e7; }

} // namespace

PhiMass phi_mass(double y, double delta)
{
    if (!(y > 0.0) || !(delta > 0.0)) throw std::domain_error("phi_mass: invalid inputs");

    // 1 - mass = (2/pi)(atan u - u/(1+u^2)), u = delta/y; the bracket is
    // ~ (2/3)u^3 for small u, so a series takes over below u = 1e-3
    const double u = delta / y;
    double bracket;
    if (u < 1e-3) {
        const double u2 = u * u;
        bracket = u * u2 * (2.0 / 3.0 + u2 * (-4.0 / 5.0 + u2 * (6.0 / 7.0)));
    } else {
        bracket = std::atan(u) - u / (1.0 + u * u);
    }
    const double deficit = (2.0 / kPi) * bracket;
    const double closed = 1.0 - deficit;

    // int_A^inf phi = (2/pi)(A y/(y^2+A^2) + atan(y/A)) by parts; negligible
    // at the cutoff but added for completeness
    const double a_max = phi_cutoff(delta, y);
    const double tail =
        (2.0 / kPi) * (a_max * y / (y * y + a_max * a_max) + std::atan(y / a_max));
    const double quad = phi_integral([](double) { return 1.0; }, delta, a_max, y) + tail;
    return {closed, quad, deficit};
}

double decomp_residual(double t, double y, double delta)
{
    if (!(y > 0.0) || !(delta > 0.0))
        throw std::domain_error("decomp_residual: invalid inputs");
    const double lo = std::max(delta, std::fabs(t));

    // int_lo^inf (1/2a) phi(a) da telescopes to P1(lo, y); the tail beyond
    // the cutoff is exactly P(a_max, y).
    const double a_max = phi_cutoff(lo, y);
    const double quad = phi_integral([](double a) { return 0.5 / a; }, lo, a_max, y) +
                        poisson_kernel(a_max, y);

    return std::fabs(p1(t, y, delta) - quad);
}

SplitConvolutions split_convolutions(const SimpleFunction& f, const SplitGeometry& geom)
{
    if (!f.is_nonnegative())
        throw std::domain_error("split_convolutions: requires a real nonnegative function");

    const double x = geom.x_star, y = geom.y_star, delta = geom.delta;
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();

    // g2 in closed form: per piece over (x - delta, x + delta),
    // int P(x - t, y) dt - P(delta, y) * length
    const double pd = poisson_kernel(delta, y);
    double g2 = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double a = std::max(bp[i], x - delta);
        const double b = std::min(bp[i + 1], x + delta);
        if (a >= b) continue;
        const double piece = (std::atan((b - x) / y) - std::atan((a - x) / y)) / kPi -
                             pd * (b - a);
        g2 += vals[i].real() * piece;
    }

    // g1 by quadrature of P1 against f, in the offset variable s = x - t so
    // the kernel peak at s ~ y is sampled at full precision even when
    // y << x (nodes near zero carry far more resolution than nodes near x).
    // Split exactly where the min switches (|s| = delta), at the mapped
    // breakpoints, and on a geometric ladder resolving the peak.
    auto integrand = [&](double s) {
        return f.eval(x - s).real() * p1(s, y, delta);
    };
    const double s_lo = x - f.support_hi();
    const double s_hi = x - f.support_lo();
    std::vector<double> splits;
    for (double t : bp) splits.push_back(x - t);
    splits.push_back(-delta);
    splits.push_back(delta);
    splits.push_back(0.0);
    for (double scale = y; scale < s_hi - s_lo; scale *= 8.0) {
        splits.push_back(-scale);
        splits.push_back(scale);
    }
    const double g1 = integrate_real(integrand, s_lo, s_hi, 1e-12, splits, 20000);

    return {g1, g2};
}

double p2_threshold_radius(double f_l1_norm, double lambda2)
{
    if (!(f_l1_norm > 0.0) || !(lambda2 > 0.0))
        throw std::domain_error("p2_threshold_radius: inputs must be positive");
    return f_l1_norm / (2.0 * kPi * lambda2);
}

} // namespace angmax
