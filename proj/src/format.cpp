#include "angmax/format.hpp"

#include <cmath>
#include <cstdio>

namespace angmax {

std::string format_double(double v)
{
    char buf[64];
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double a = std::fabs(v);
    if (a != 0.0 && (a < 1e-4 || a >= 1e6)) {
        std::snprintf(buf, sizeof buf, "%.16e", v);
        return buf;
    }
    // 17 significant digits in fixed notation
    int prec = 16;
    if (a > 0.0) prec = 16 - static_cast<int>(std::floor(std::log10(a)));
    if (prec < 0) prec = 0;
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string format_complex(std::complex<double> v)
{
    return format_double(v.real()) + "," + format_double(v.imag());
}

} // namespace angmax
