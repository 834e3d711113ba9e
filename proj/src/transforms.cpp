#include "angmax/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace angmax {

const char* kind_name(TransformKind k)
{
    switch (k) {
        case TransformKind::Poisson: return "poisson";
        case TransformKind::Stieltjes: return "stieltjes";
        case TransformKind::LaplaceRay: return "laplace";
        case TransformKind::CauchyIntegral: return "cauchy";
        case TransformKind::Hilbert: return "hilbert";
    }
    return "?";
}

TransformKind kind_from_name(const std::string& name)
{
    if (name == "poisson") return TransformKind::Poisson;
    if (name == "stieltjes") return TransformKind::Stieltjes;
    if (name == "laplace") return TransformKind::LaplaceRay;
    if (name == "cauchy") return TransformKind::CauchyIntegral;
    if (name == "hilbert") return TransformKind::Hilbert;
    throw std::invalid_argument("unknown transform kind: " + name);
}

Sector natural_sector(TransformKind k)
{
    switch (k) {
        case TransformKind::Poisson:
        case TransformKind::CauchyIntegral: return Sector::upper_half();
        case TransformKind::Stieltjes: return Sector::cut_plane();
        case TransformKind::LaplaceRay: return Sector::right_half();
        case TransformKind::Hilbert: break;
    }
    throw std::domain_error("natural_sector: Hilbert transform lives on the boundary");
}

complexd poisson(const SimpleFunction& f, double x, double y)
{
    if (!(y > 0.0)) throw std::domain_error("poisson: y must be positive");
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    const double inv_y = 1.0 / y;

    complexd sum{0.0, 0.0};
    double prev = std::atan((bp[0] - x) * inv_y);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double cur = std::atan((bp[i + 1] - x) * inv_y);
        sum += vals[i] * (cur - prev);
        prev = cur;
    }
    return sum * (1.0 / kPi);
}

complexd stieltjes(const SimpleFunction& f, complexd z)
{
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    if (z.imag() == 0.0 && z.real() >= bp.front() && z.real() <= bp.back())
        throw std::domain_error("stieltjes: z lies on the support segment");

    complexd sum{0.0, 0.0};
    complexd prev = std::log(complexd(bp[0], 0.0) - z);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const complexd cur = std::log(complexd(bp[i + 1], 0.0) - z);
        sum += vals[i] * (cur - prev);
        prev = cur;
    }
    return sum;
}

complexd em1_over(complexd w)
{
    // 6-term series below |w| = 1e-4: truncation under 3e-28 there.
    if (std::abs(w) < 1e-4) {
        complexd acc{1.0 / 720.0, 0.0};
        acc = acc * (-w) + complexd{1.0 / 120.0, 0.0};
        acc = acc * (-w) + complexd{1.0 / 24.0, 0.0};
        acc = acc * (-w) + complexd{1.0 / 6.0, 0.0};
        acc = acc * (-w) + complexd{1.0 / 2.0, 0.0};
        acc = acc * (-w) + complexd{1.0, 0.0};
        return acc;
        // 1 - w/2 + w^2/6 - w^3/24 + w^4/120 - w^5/720
    }
    return (1.0 - std::exp(-w)) / w;
}

complexd laplace_simple(const SimpleFunction& f, complexd z)
{
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();

    complexd sum{0.0, 0.0};
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == complexd{0.0, 0.0}) continue;
        const double dt = bp[i + 1] - bp[i];
        const complexd head = std::exp(-z * bp[i]);
        sum += vals[i] * head * dt * em1_over(z * dt);
    }
    return sum;
}

complexd laplace_ray(const SimpleFunction& f, double rho, double theta)
{
    if (!(rho > 0.0)) throw std::domain_error("laplace_ray: rho must be positive");
    if (!(std::fabs(theta) < 0.5 * kPi))
        throw std::domain_error("laplace_ray: |theta| must be < pi/2");
    const complexd z{rho * std::cos(theta), rho * std::sin(theta)};
    return laplace_simple(f, z);
}

complexd laplace_exp(const ExpFunction& g, complexd z)
{
    const complexd denom = z + complexd{g.rate, 0.0};
    if (!(z.real() > -g.rate))
        throw std::domain_error("laplace_exp: need Re z > -c");
    return g.amplitude / denom;
}

complexd hilbert(const SimpleFunction& f, double x)
{
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    for (double t : bp)
        if (x == t) throw std::domain_error("hilbert: x coincides with a breakpoint");

    complexd sum{0.0, 0.0};
    double prev = std::log(std::fabs(x - bp[0]));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double cur = std::log(std::fabs(x - bp[i + 1]));
        sum += vals[i] * (prev - cur); // (1/pi) ln|(x - t_{i-1})/(x - t_i)|
        prev = cur;
    }
    return sum * (1.0 / kPi);
}

complexd cauchy_integral(const SimpleFunction& f, complexd z)
{
    if (z.imag() == 0.0) throw std::domain_error("cauchy_integral: need Im z != 0");
    const complexd two_pi_i{0.0, 2.0 * kPi};
    return stieltjes(f, z) / two_pi_i;
}

} // namespace angmax
