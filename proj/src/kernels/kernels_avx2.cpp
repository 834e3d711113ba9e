// AVX2 variants of the angular-scan kernels: four angles per pass, same
// per-piece formulas as the scalar reference.

#include "angmax/kernels.hpp"

#include "avx2_math.hpp"

#include <cmath>
#include <complex>

namespace angmax::kernels {

namespace {

using namespace avx2;

constexpr double kPi = 3.14159265358979323846;

// tail handling: gather the remaining <4 angles into a padded register
inline vd load_thetas(const double* thetas, int count, int j)
{
    if (j + 4 <= count) return _mm256_loadu_pd(thetas + j);
    alignas(32) double tmp[4];
    for (int k = 0; k < 4; ++k) tmp[k] = thetas[(j + k < count) ? j + k : count - 1];
    return _mm256_load_pd(tmp);
}

inline void store_out(double* out, int count, int j, vd v)
{
    if (j + 4 <= count) {
        _mm256_storeu_pd(out + j, v);
        return;
    }
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, v);
    for (int k = 0; j + k < count; ++k) out[j + k] = tmp[k];
}

} // namespace

void poisson_abs_batch_avx2(const FuncView& f, double rho,
                            const double* thetas, int count, double* out)
{
    const vd vrho = vset(rho);
    for (int j = 0; j < count; j += 4) {
        const vd th = load_thetas(thetas, count, j);
        vd s, c;
        sincos_pd(th, &s, &c);
        const vd x = _mm256_mul_pd(vrho, c);
        const vd inv_y = _mm256_div_pd(vset(1.0), _mm256_mul_pd(vrho, s));

        vd acc_re = _mm256_setzero_pd();
        vd acc_im = _mm256_setzero_pd();
        vd prev = atan_pd(_mm256_mul_pd(_mm256_sub_pd(vset(f.breakpoints[0]), x), inv_y));
        for (int i = 0; i < f.pieces; ++i) {
            const vd cur =
                atan_pd(_mm256_mul_pd(_mm256_sub_pd(vset(f.breakpoints[i + 1]), x), inv_y));
            const vd d = _mm256_sub_pd(cur, prev);
            acc_re = _mm256_fmadd_pd(vset(f.val_re[i]), d, acc_re);
            acc_im = _mm256_fmadd_pd(vset(f.val_im[i]), d, acc_im);
            prev = cur;
        }
        store_out(out, count, j, _mm256_mul_pd(hypot_pd(acc_re, acc_im), vset(1.0 / kPi)));
    }
}

void stieltjes_abs_batch_avx2(const FuncView& f, double rho,
                              const double* thetas, int count, double* out)
{
    const vd vrho = vset(rho);
    for (int j = 0; j < count; j += 4) {
        const vd th = load_thetas(thetas, count, j);
        vd s, c;
        sincos_pd(th, &s, &c);
        const vd zr = _mm256_mul_pd(vrho, c);
        const vd zi = _mm256_mul_pd(vrho, s);
        const vd nzi = _mm256_sub_pd(_mm256_setzero_pd(), zi);
        const vd zi2 = _mm256_mul_pd(zi, zi);

        vd acc_re = _mm256_setzero_pd();
        vd acc_im = _mm256_setzero_pd();
        vd wr = _mm256_sub_pd(vset(f.breakpoints[0]), zr);
        vd prev_re = _mm256_mul_pd(vset(0.5), log_pd(_mm256_fmadd_pd(wr, wr, zi2)));
        vd prev_im = atan2_pd(nzi, wr);
        for (int i = 0; i < f.pieces; ++i) {
            wr = _mm256_sub_pd(vset(f.breakpoints[i + 1]), zr);
            const vd cur_re = _mm256_mul_pd(vset(0.5), log_pd(_mm256_fmadd_pd(wr, wr, zi2)));
            const vd cur_im = atan2_pd(nzi, wr);
            const vd dr = _mm256_sub_pd(cur_re, prev_re);
            const vd di = _mm256_sub_pd(cur_im, prev_im);
            acc_re = _mm256_fmadd_pd(vset(f.val_re[i]), dr, acc_re);
            acc_re = _mm256_fnmadd_pd(vset(f.val_im[i]), di, acc_re);
            acc_im = _mm256_fmadd_pd(vset(f.val_re[i]), di, acc_im);
            acc_im = _mm256_fmadd_pd(vset(f.val_im[i]), dr, acc_im);
            prev_re = cur_re;
            prev_im = cur_im;
        }
        store_out(out, count, j, hypot_pd(acc_re, acc_im));
    }
}

void laplace_abs_batch_avx2(const FuncView& f, double rho,
                            const double* thetas, int count, double* out)
{
    const vd vrho = vset(rho);
    for (int j = 0; j < count; j += 4) {
        const vd th = load_thetas(thetas, count, j);
        vd s, c;
        sincos_pd(th, &s, &c);
        const vd zr = _mm256_mul_pd(vrho, c);
        const vd zi = _mm256_mul_pd(vrho, s);

        vd acc_re = _mm256_setzero_pd();
        vd acc_im = _mm256_setzero_pd();
        for (int i = 0; i < f.pieces; ++i) {
            if (f.val_re[i] == 0.0 && f.val_im[i] == 0.0) continue;
            const double t0 = f.breakpoints[i];
            const double dt = f.breakpoints[i + 1] - t0;

            // head = exp(-z t0)
            const vd mag = exp_pd(_mm256_mul_pd(zr, vset(-t0)));
            vd hs, hc;
            sincos_pd(_mm256_mul_pd(zi, vset(t0)), &hs, &hc);
            const vd head_re = _mm256_mul_pd(mag, hc);
            const vd head_im = _mm256_mul_pd(mag, _mm256_sub_pd(_mm256_setzero_pd(), hs));

            // E = (1 - exp(-w))/w, w = z dt
            const vd wr = _mm256_mul_pd(zr, vset(dt));
            const vd wi = _mm256_mul_pd(zi, vset(dt));
            const vd wmag2 = _mm256_fmadd_pd(wr, wr, _mm256_mul_pd(wi, wi));

            // direct branch
            const vd emag = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), wr));
            vd es, ec;
            sincos_pd(wi, &es, &ec);
            const vd num_re = _mm256_fnmadd_pd(emag, ec, vset(1.0));
            const vd num_im = _mm256_mul_pd(emag, es);
            const vd winv = _mm256_div_pd(vset(1.0), wmag2);
            vd dir_re = _mm256_mul_pd(_mm256_fmadd_pd(num_re, wr, _mm256_mul_pd(num_im, wi)), winv);
            vd dir_im = _mm256_mul_pd(_mm256_fmsub_pd(num_im, wr, _mm256_mul_pd(num_re, wi)), winv);

            // series branch: Horner in (-w)
            vd ser_re = vset(1.0 / 720.0), ser_im = _mm256_setzero_pd();
            const double coef[5] = {1.0 / 120.0, 1.0 / 24.0, 1.0 / 6.0, 0.5, 1.0};
            for (double cf : coef) {
                const vd tr = _mm256_fmsub_pd(ser_im, wi, _mm256_mul_pd(ser_re, wr));
                const vd ti = _mm256_fnmadd_pd(ser_re, wi, _mm256_sub_pd(_mm256_setzero_pd(),
                                                                         _mm256_mul_pd(ser_im, wr)));
                ser_re = _mm256_add_pd(tr, vset(cf));
                ser_im = ti;
            }

            const vd small = _mm256_cmp_pd(wmag2, vset(1e-8), _CMP_LT_OQ); // |w| < 1e-4
            const vd e_re = _mm256_blendv_pd(dir_re, ser_re, small);
            const vd e_im = _mm256_blendv_pd(dir_im, ser_im, small);

            // v * head * dt * E
            const vd ph_re = _mm256_mul_pd(
                _mm256_fmsub_pd(head_re, e_re, _mm256_mul_pd(head_im, e_im)), vset(dt));
            const vd ph_im = _mm256_mul_pd(
                _mm256_fmadd_pd(head_re, e_im, _mm256_mul_pd(head_im, e_re)), vset(dt));

            acc_re = _mm256_fmadd_pd(vset(f.val_re[i]), ph_re, acc_re);
            acc_re = _mm256_fnmadd_pd(vset(f.val_im[i]), ph_im, acc_re);
            acc_im = _mm256_fmadd_pd(vset(f.val_re[i]), ph_im, acc_im);
            acc_im = _mm256_fmadd_pd(vset(f.val_im[i]), ph_re, acc_im);
        }
        store_out(out, count, j, hypot_pd(acc_re, acc_im));
    }
}

} // namespace angmax::kernels
