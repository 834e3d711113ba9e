#pragma once

#include <complex>
#include <string>

namespace angmax {

/// Formats a double with 17 significant digits, using plain decimal
/// notation when |v| lies in [1e-4, 1e6) and lowercase scientific
/// otherwise. The mapping is bijective on finite doubles, so emitted
/// files diff cleanly across reruns.
std::string format_double(double v);

std::string format_complex(std::complex<double> v); // "re,im" pair

} // namespace angmax
