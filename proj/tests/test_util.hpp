#pragma once

#include "angmax/simple_function.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace angmax::testutil {

/// Deterministic uniform draws straight from the engine bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) // inclusive
    {
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

inline SimpleFunction random_simple(Rng& rng, int max_pieces = 6, double bp_max = 4.0,
                                    double vmax = 2.0, bool nonneg = false, bool complex_vals = true)
{
    const int pieces = rng.uniform_int(1, max_pieces);
    std::vector<double> bp(static_cast<std::size_t>(pieces) + 1);
    for (;;) {
        for (double& t : bp) t = rng.uniform(0.0, bp_max);
        std::sort(bp.begin(), bp.end());
        bool ok = true;
        for (std::size_t i = 1; i < bp.size(); ++i)
            if (bp[i] - bp[i - 1] < 1e-6) ok = false;
        if (ok) break;
    }
    std::vector<complexd> vals(static_cast<std::size_t>(pieces));
    for (auto& v : vals) {
        if (nonneg)
            v = {rng.uniform(0.0, vmax), 0.0};
        else if (complex_vals)
            v = {rng.uniform(-vmax, vmax), rng.uniform(-vmax, vmax)};
        else
            v = {rng.uniform(-vmax, vmax), 0.0};
    }
    return SimpleFunction(std::move(bp), std::move(vals));
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool close_rel(double a, double b, double rel)
{
    return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

} // namespace angmax::testutil
