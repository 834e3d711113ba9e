#pragma once

#include "angmax/simple_function.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace angmax {

/// Deterministic corpus of test functions: a seeded generator plus named
/// fixtures. Identical seed and parameters reproduce the same members on
/// any platform (raw mt19937_64 draws, no distribution objects).
struct FamilyConfig {
    int count = 100;
    int max_pieces = 6;
    double breakpoint_max = 4.0;
    double value_max = 2.0;
    bool nonnegative = true;
    std::uint64_t seed = 12345;
};

struct FunctionFamily {
    FamilyConfig config;
    std::vector<std::string> fixtures; // appended named fixtures

    /// Generated members followed by the named fixtures, with stable ids.
    std::vector<std::pair<std::string, SimpleFunction>> members() const;
};

/// Named simple-function fixtures: indicator01, twobump, comb, step3.
SimpleFunction fixture(const std::string& name);

/// Named exponential fixtures: exp1 (t -> e^{-t}).
ExpFunction exp_fixture(const std::string& name);

} // namespace angmax
