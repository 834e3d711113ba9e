// Scalar reference kernels. These spell out the per-piece closed forms with
// plain libm calls; the vectorized variants must agree with them within a
// few ulps of the term magnitudes (see test_kernels.cpp).

#include "angmax/kernels.hpp"

#include <cmath>
#include <complex>

namespace angmax::kernels {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline std::complex<double> em1_over(std::complex<double> w)
{
    if (std::abs(w) < 1e-4) {
        std::complex<double> acc{1.0 / 720.0, 0.0};
        acc = acc * (-w) + std::complex<double>{1.0 / 120.0, 0.0};
        acc = acc * (-w) + std::complex<double>{1.0 / 24.0, 0.0};
        acc = acc * (-w) + std::complex<double>{1.0 / 6.0, 0.0};
        acc = acc * (-w) + std::complex<double>{1.0 / 2.0, 0.0};
        acc = acc * (-w) + std::complex<double>{1.0, 0.0};
        return acc;
    }
    return (1.0 - std::exp(-w)) / w;
}

} // namespace

void poisson_abs_batch_scalar(const FuncView& f, double rho,
                              const double* thetas, int count, double* out)
{
    for (int j = 0; j < count; ++j) {
        const double x = rho * std::cos(thetas[j]);
        const double y = rho * std::sin(thetas[j]);
        const double inv_y = 1.0 / y;

        double acc_re = 0.0, acc_im = 0.0;
        double prev = std::atan((f.breakpoints[0] - x) * inv_y);
        for (int i = 0; i < f.pieces; ++i) {
            const double cur = std::atan((f.breakpoints[i + 1] - x) * inv_y);
            const double d = cur - prev;
            acc_re += f.val_re[i] * d;
            acc_im += f.val_im[i] * d;
            prev = cur;
        }
        out[j] = std::hypot(acc_re, acc_im) / kPi;
    }
}

void stieltjes_abs_batch_scalar(const FuncView& f, double rho,
                                const double* thetas, int count, double* out)
{
    for (int j = 0; j < count; ++j) {
        const double zr = rho * std::cos(thetas[j]);
        const double zi = rho * std::sin(thetas[j]);

        double acc_re = 0.0, acc_im = 0.0;
        double wr = f.breakpoints[0] - zr;
        double prev_re = 0.5 * std::log(wr * wr + zi * zi);
        double prev_im = std::atan2(-zi, wr);
        for (int i = 0; i < f.pieces; ++i) {
            wr = f.breakpoints[i + 1] - zr;
            const double cur_re = 0.5 * std::log(wr * wr + zi * zi);
            const double cur_im = std::atan2(-zi, wr);
            const double dr = cur_re - prev_re;
            const double di = cur_im - prev_im;
            acc_re += f.val_re[i] * dr - f.val_im[i] * di;
            acc_im += f.val_re[i] * di + f.val_im[i] * dr;
            prev_re = cur_re;
            prev_im = cur_im;
        }
        out[j] = std::hypot(acc_re, acc_im);
    }
}

void laplace_abs_batch_scalar(const FuncView& f, double rho,
                              const double* thetas, int count, double* out)
{
    for (int j = 0; j < count; ++j) {
        const std::complex<double> z{rho * std::cos(thetas[j]), rho * std::sin(thetas[j])};

        std::complex<double> acc{0.0, 0.0};
        for (int i = 0; i < f.pieces; ++i) {
            if (f.val_re[i] == 0.0 && f.val_im[i] == 0.0) continue;
            const double dt = f.breakpoints[i + 1] - f.breakpoints[i];
            const std::complex<double> head = std::exp(-z * f.breakpoints[i]);
            const std::complex<double> v{f.val_re[i], f.val_im[i]};
            acc += v * head * dt * em1_over(z * dt);
        }
        out[j] = std::abs(acc);
    }
}

} // namespace angmax::kernels
