#include "angmax/family.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace angmax {

namespace {

double uniform01(std::mt19937_64& eng)
{
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

SimpleFunction generate_one(std::mt19937_64& eng, const FamilyConfig& cfg)
{
    const int pieces = 1 + static_cast<int>(uniform01(eng) * cfg.max_pieces);

    std::vector<double> bp(static_cast<std::size_t>(pieces) + 1);
    for (;;) {
        for (double& t : bp) t = uniform01(eng) * cfg.breakpoint_max;
        std::sort(bp.begin(), bp.end());
        bool distinct = true;
        for (std::size_t i = 1; i < bp.size(); ++i)
            if (bp[i] - bp[i - 1] < 1e-9 * cfg.breakpoint_max) distinct = false;
        if (distinct) break;
    }

    std::vector<complexd> vals(static_cast<std::size_t>(pieces));
    for (auto& v : vals) {
        if (cfg.nonnegative) {
            v = complexd{uniform01(eng) * cfg.value_max, 0.0};
        } else {
            v = complexd{(2.0 * uniform01(eng) - 1.0) * cfg.value_max,
                         (2.0 * uniform01(eng) - 1.0) * cfg.value_max};
        }
    }
    return SimpleFunction(std::move(bp), std::move(vals));
}

} // namespace

std::vector<std::pair<std::string, SimpleFunction>> FunctionFamily::members() const
{
    std::mt19937_64 eng(config.seed);
    std::vector<std::pair<std::string, SimpleFunction>> out;
    out.reserve(static_cast<std::size_t>(config.count) + fixtures.size());
    for (int i = 0; i < config.count; ++i)
        out.emplace_back("rand" + std::to_string(i), generate_one(eng, config));
    for (const std::string& name : fixtures)
        out.emplace_back(name, fixture(name));
    return out;
}

SimpleFunction fixture(const std::string& name)
{
    if (name == "indicator01") return SimpleFunction::indicator(0.0, 1.0);
    if (name == "twobump")
        return SimpleFunction({0.0, 0.5, 2.0, 3.0}, {{1.5, 0.0}, {0.0, 0.0}, {0.75, 0.0}});
    if (name == "step3")
        return SimpleFunction({0.0, 1.0, 2.0, 4.0}, {{2.0, 0.0}, {1.0, 0.0}, {0.25, 0.0}});
    if (name == "comb") {
        std::vector<double> bp;
        std::vector<complexd> vals;
        for (int k = 0; k <= 8; ++k) bp.push_back(0.25 * k);
        for (int k = 0; k < 8; ++k) vals.emplace_back(k % 2 == 0 ? 1.0 : -1.0, 0.0);
        return SimpleFunction(std::move(bp), std::move(vals));
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

ExpFunction exp_fixture(const std::string& name)
{
    if (name == "exp1") return ExpFunction(complexd{1.0, 0.0}, 1.0);
    throw std::invalid_argument("unknown exponential fixture: " + name);
}

} // namespace angmax
