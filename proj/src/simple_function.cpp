#include "angmax/simple_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace angmax {

namespace {

bool finite(complexd v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

} // namespace

SimpleFunction::SimpleFunction(std::vector<double> breakpoints, std::vector<complexd> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("SimpleFunction: need at least one piece");
    if (breakpoints_.size() != values_.size() + 1)
        throw std::invalid_argument("SimpleFunction: need n+1 breakpoints for n values");
    for (double t : breakpoints_)
        if (!std::isfinite(t))
            throw std::invalid_argument("SimpleFunction: non-finite breakpoint");
    if (breakpoints_.front() < 0.0)
        throw std::invalid_argument("SimpleFunction: breakpoints must start at t0 >= 0");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            throw std::invalid_argument("SimpleFunction: breakpoints must be strictly increasing");
    for (complexd v : values_)
        if (!finite(v))
            throw std::invalid_argument("SimpleFunction: non-finite value");
}

complexd SimpleFunction::eval(double t) const
{
    if (t <= breakpoints_.front() || t > breakpoints_.back()) return {0.0, 0.0};
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    return values_[idx - 1];
}

bool SimpleFunction::is_real() const
{
    for (complexd v : values_)
        if (v.imag() != 0.0) return false;
    return true;
}

bool SimpleFunction::is_nonnegative() const
{
    for (complexd v : values_)
        if (v.imag() != 0.0 || v.real() < 0.0) return false;
    return true;
}

double SimpleFunction::lp_norm(double p) const
{
    if (std::isinf(p)) {
        double m = 0.0;
        for (complexd v : values_) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double len = breakpoints_[i + 1] - breakpoints_[i];
        const double a = std::abs(values_[i]);
        if (a > 0.0) sum += std::pow(a, p) * len;
    }
    return std::pow(sum, 1.0 / p);
}

SimpleFunction SimpleFunction::dilate(double s) const
{
    if (!(s > 0.0)) throw std::domain_error("dilate: scale must be positive");
    std::vector<double> bp(breakpoints_);
    for (double& t : bp) t /= s;
    return SimpleFunction(std::move(bp), values_);
}

SimpleFunction SimpleFunction::combine(complexd a, const SimpleFunction& f,
                                       complexd b, const SimpleFunction& g)
{
    std::vector<double> bp;
    bp.reserve(f.breakpoints_.size() + g.breakpoints_.size());
    std::merge(f.breakpoints_.begin(), f.breakpoints_.end(),
               g.breakpoints_.begin(), g.breakpoints_.end(), std::back_inserter(bp));
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    std::vector<complexd> vals(bp.size() - 1);
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double mid = 0.5 * (bp[i] + bp[i + 1]);
        vals[i] = a * f.eval(mid) + b * g.eval(mid);
    }
    return SimpleFunction(std::move(bp), std::move(vals));
}

std::string SimpleFunction::to_json() const
{
    nlohmann::ordered_json j;
    j["breakpoints"] = breakpoints_;
    auto& vals = j["values"];
    vals = nlohmann::ordered_json::array();
    for (complexd v : values_) vals.push_back({v.real(), v.imag()});
    return j.dump();
}

SimpleFunction SimpleFunction::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<double> bp = j.at("breakpoints").get<std::vector<double>>();
    std::vector<complexd> vals;
    for (const auto& pair : j.at("values")) {
        if (pair.is_number()) {
            vals.emplace_back(pair.get<double>(), 0.0);
        } else {
            if (pair.size() != 2) throw std::invalid_argument("SimpleFunction: value entries must be [re,im]");
            vals.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
    }
    return SimpleFunction(std::move(bp), std::move(vals));
}

SimpleFunction SimpleFunction::indicator(double lo, double hi)
{
    return SimpleFunction({lo, hi}, {complexd{1.0, 0.0}});
}

ExpFunction::ExpFunction(complexd a, double c) : amplitude(a), rate(c)
{
    if (!(c > 0.0)) throw std::invalid_argument("ExpFunction: rate must be positive");
    if (!finite(a)) throw std::invalid_argument("ExpFunction: non-finite amplitude");
}

double ExpFunction::lp_norm(double p) const
{
    if (std::isinf(p)) return std::abs(amplitude);
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1");
    // (|A|^p / (p c))^(1/p)
    return std::abs(amplitude) * std::pow(p * rate, -1.0 / p);
}

} // namespace angmax
