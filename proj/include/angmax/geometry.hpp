#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace angmax {

inline constexpr double kPi = 3.14159265358979323846;

/// Open angular sector theta_lo < arg z < theta_hi. Endpoints are never
/// admissible evaluation angles.
struct Sector {
    double theta_lo;
    double theta_hi;

    Sector(double lo, double hi) : theta_lo(lo), theta_hi(hi)
    {
        if (!(lo < hi)) throw std::invalid_argument("Sector: theta_lo must be < theta_hi");
        if (!(hi - lo <= 2.0 * kPi + 1e-15))
            throw std::invalid_argument("Sector: width must be <= 2*pi");
    }

    double span() const { return theta_hi - theta_lo; }

    bool contains(double theta) const { return theta > theta_lo && theta < theta_hi; }

    static Sector cut_plane()       { return Sector(0.0, 2.0 * kPi); }      // C*
    static Sector upper_half()      { return Sector(0.0, kPi); }            // H
    static Sector right_half()      { return Sector(-0.5 * kPi, 0.5 * kPi); } // C+
};

struct PolarPoint {
    double rho;
    double theta;

    PolarPoint(double r, double t) : rho(r), theta(t)
    {
        if (!(r > 0.0)) throw std::invalid_argument("PolarPoint: rho must be positive");
    }

    double x() const { return rho * std::cos(theta); }
    double y() const { return rho * std::sin(theta); }
    std::complex<double> z() const { return {x(), y()}; }
};

/// Log-spaced radial grid on [rho_min, rho_max].
struct RadialGrid {
    double rho_min;
    double rho_max;
    int count;

    RadialGrid(double lo, double hi, int n) : rho_min(lo), rho_max(hi), count(n)
    {
        if (!(lo > 0.0) || !(lo < hi))
            throw std::invalid_argument("RadialGrid: need 0 < rho_min < rho_max");
        if (n < 2) throw std::invalid_argument("RadialGrid: count must be >= 2");
    }

    static RadialGrid standard() { return RadialGrid(1e-3, 1e3, 2048); }

    double node(int i) const
    {
        if (i == 0) return rho_min;
        if (i == count - 1) return rho_max;
        const double u = static_cast<double>(i) / (count - 1);
        return rho_min * std::exp(u * std::log(rho_max / rho_min));
    }

    std::vector<double> nodes() const
    {
        std::vector<double> out(count);
        for (int i = 0; i < count; ++i) out[i] = node(i);
        return out;
    }
};

} // namespace angmax
