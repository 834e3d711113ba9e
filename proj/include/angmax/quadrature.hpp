#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace angmax {

/// Thrown when the adaptive scheme exhausts its subdivision budget; carries
/// the best estimate and the error bound it reached.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(std::string what, std::complex<double> estimate, double error_bound)
        : std::runtime_error(std::move(what)), best_estimate(estimate), bound(error_bound) {}

    std::complex<double> best_estimate;
    double bound;
};

struct QuadResult {
    std::complex<double> value;
    double error; // accumulated error bound
    int evaluations;
};

/// Adaptive Gauss-Kronrod (7,15) integration of a complex-valued integrand.
///
/// The interval [a,b] is first split at the supplied interior points (kernel
/// switch points, function breakpoints), then the segment with the largest
/// embedded-rule error estimate is bisected until the accumulated bound drops
/// below abs_tol or max_segments is reached.
QuadResult integrate(const std::function<std::complex<double>(double)>& f,
                     double a, double b,
                     double abs_tol = 1e-10,
                     const std::vector<double>& split_points = {},
                     int max_segments = 4000);

/// Real-valued convenience wrapper.
double integrate_real(const std::function<double(double)>& f,
                      double a, double b,
                      double abs_tol = 1e-10,
                      const std::vector<double>& split_points = {},
                      int max_segments = 4000);

} // namespace angmax
