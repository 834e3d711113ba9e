#pragma once

#include <complex>
#include <string>
#include <vector>

namespace angmax {

using complexd = std::complex<double>;

/// Piecewise-constant function on [0, inf) with finite support.
///
/// Breakpoints t0 < t1 < ... < tn (t0 >= 0) delimit n pieces; the function
/// takes the constant value values[i] on (t_{i-1}, t_i) and vanishes outside
/// [t0, tn]. Pieces valued zero are kept as-is; breakpoint merging stays
/// exact that way. Immutable after construction.
class SimpleFunction {
public:
    SimpleFunction(std::vector<double> breakpoints, std::vector<complexd> values);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<complexd>& values() const { return values_; }

    int piece_count() const { return static_cast<int>(values_.size()); }
    double support_lo() const { return breakpoints_.front(); }
    double support_hi() const { return breakpoints_.back(); }

    /// Pointwise evaluation; pieces are treated as half-open (t_{i-1}, t_i].
    complexd eval(double t) const;

    bool is_real() const;
    /// Real and nonnegative on every piece.
    bool is_nonnegative() const;

    /// Exact Lp norm: (sum |v_i|^p (t_i - t_{i-1}))^(1/p); max|v_i| for p = inf.
    /// p must be >= 1 (p = infinity allowed).
    double lp_norm(double p) const;

    /// f_s(t) = f(s*t): breakpoints divided by s, values unchanged.
    SimpleFunction dilate(double s) const;

    /// a*f + b*g on the merged breakpoint set; exact.
    static SimpleFunction combine(complexd a, const SimpleFunction& f,
                                  complexd b, const SimpleFunction& g);

    /// JSON form {"breakpoints":[...],"values":[[re,im],...]}.
    std::string to_json() const;
    static SimpleFunction from_json(const std::string& text);

    /// Indicator of [lo, hi].
    static SimpleFunction indicator(double lo, double hi);

private:
    std::vector<double> breakpoints_;
    std::vector<complexd> values_;
};

/// t |-> amplitude * exp(-c t) on [0, inf); closed-form companion for
/// Laplace-transform checks.
struct ExpFunction {
    complexd amplitude;
    double rate;

    ExpFunction(complexd a, double c);

    complexd eval(double t) const { return amplitude * std::exp(-rate * t); }
    double lp_norm(double p) const;
};

} // namespace angmax
