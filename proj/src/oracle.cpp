#include "angmax/oracle.hpp"

#include "angmax/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace angmax {

namespace {

std::vector<double> interior_splits(const SimpleFunction& f)
{
    const auto& bp = f.breakpoints();
    return std::vector<double>(bp.begin() + 1, bp.end() - 1);
}

complexd poisson_quad(const SimpleFunction& f, double x, double y, double tol)
{
    if (!(y > 0.0)) throw std::domain_error("quad_oracle: y must be positive");
    auto integrand = [&f, x, y](double t) {
        const double d = t - x;
        return f.eval(t) * (y / (d * d + y * y));
    };
    auto splits = interior_splits(f);
    // resolve the kernel peak when it sits inside the support
    if (x > f.support_lo() && x < f.support_hi()) {
        splits.push_back(x);
        splits.push_back(x - y);
        splits.push_back(x + y);
    }
    return integrate(integrand, f.support_lo(), f.support_hi(), tol, splits).value / kPi;
}

complexd stieltjes_quad(const SimpleFunction& f, complexd z, double tol)
{
    if (z.imag() == 0.0 && z.real() >= f.support_lo() && z.real() <= f.support_hi())
        throw std::domain_error("quad_oracle: z lies on the support segment");
    auto integrand = [&f, z](double t) { return f.eval(t) / (complexd(t, 0.0) - z); };
    auto splits = interior_splits(f);
    return integrate(integrand, f.support_lo(), f.support_hi(), tol, splits).value;
}

complexd laplace_quad(const SimpleFunction& f, complexd z, double tol)
{
    auto integrand = [&f, z](double t) { return f.eval(t) * std::exp(-z * t); };
    auto splits = interior_splits(f);
    return integrate(integrand, f.support_lo(), f.support_hi(), tol, splits).value;
}

/// Principal value by symmetric excision: integrate over the support minus
/// (x-eps, x+eps), then extrapolate the leading O(eps) term away using three
/// nested excision radii.
complexd hilbert_quad(const SimpleFunction& f, double x, double tol)
{
    const auto& bp = f.breakpoints();
    for (double t : bp)
        if (x == t) throw std::domain_error("quad_oracle: x coincides with a breakpoint");

    auto excised = [&f, x, tol](double eps) {
        auto integrand = [&f, x](double t) { return f.eval(t) / (x - t); };
        auto splits = interior_splits(f);
        complexd acc{0.0, 0.0};
        const double lo = f.support_lo(), hi = f.support_hi();
        if (x - eps > lo)
            acc += integrate(integrand, lo, std::min(x - eps, hi), tol * 0.25, splits).value;
        if (x + eps < hi)
            acc += integrate(integrand, std::max(x + eps, lo), hi, tol * 0.25, splits).value;
        return acc;
    };

    double gap = std::fabs(x - bp[0]);
    for (double t : bp) gap = std::min(gap, std::fabs(x - t));
    const double eps0 = 0.5 * gap;

    const complexd i1 = excised(eps0 * 0.5);
    const complexd i2 = excised(eps0 * 0.25);
    const complexd r2 = 2.0 * i2 - i1; // cancel the leading O(eps) term
    return r2 / kPi;
}

} // namespace

complexd quad_oracle(TransformKind kind, const SimpleFunction& f, complexd point, double abs_tol)
{
    switch (kind) {
        case TransformKind::Poisson:
            return poisson_quad(f, point.real(), point.imag(), abs_tol);
        case TransformKind::Stieltjes:
            return stieltjes_quad(f, point, abs_tol);
        case TransformKind::LaplaceRay: {
            const double rho = std::abs(point);
            const double theta = std::atan2(point.imag(), point.real());
            if (!(rho > 0.0) || !(std::fabs(theta) < 0.5 * kPi))
                throw std::domain_error("quad_oracle: Laplace point must lie in the right half-plane");
            return laplace_quad(f, point, abs_tol);
        }
        case TransformKind::CauchyIntegral: {
            if (point.imag() == 0.0) throw std::domain_error("quad_oracle: need Im z != 0");
            return stieltjes_quad(f, point, abs_tol) / complexd{0.0, 2.0 * kPi};
        }
        case TransformKind::Hilbert: {
            if (point.imag() != 0.0)
                throw std::domain_error("quad_oracle: Hilbert point must be real");
            return hilbert_quad(f, point.real(), abs_tol);
        }
    }
    throw std::logic_error("quad_oracle: unreachable");
}

} // namespace angmax
