#pragma once

// Four-lane double-precision elementary functions for the AVX2 kernels.
// Rational/polynomial approximations follow the classical Cephes forms;
// observed accuracy is within a few ulps of libm over the kernel argument
// ranges (validated in test_kernels.cpp).

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace angmax::kernels::avx2 {

using vd = __m256d;

inline vd vset(double a) { return _mm256_set1_pd(a); }

inline vd polevl5(vd z, double c0, double c1, double c2, double c3, double c4, double c5)
{
    vd p = vset(c0);
    p = _mm256_fmadd_pd(p, z, vset(c1));
    p = _mm256_fmadd_pd(p, z, vset(c2));
    p = _mm256_fmadd_pd(p, z, vset(c3));
    p = _mm256_fmadd_pd(p, z, vset(c4));
    p = _mm256_fmadd_pd(p, z, vset(c5));
    return p;
}

// ---------------------------------------------------------------------------
// exp: Cody-Waite reduction x = n*ln2 + r, rational Pade kernel on r.
// Arguments below -708.4 flush to zero; the kernels only ever exponentiate
// non-positive values.
// ---------------------------------------------------------------------------
inline vd exp_pd(vd x)
{
    const vd log2e = vset(1.4426950408889634073599);
    const vd c1 = vset(6.93145751953125e-1);
    const vd c2 = vset(1.42860682030941723212e-6);

    const vd under = vset(-708.396418532264);
    const vd over = vset(709.782712893384);
    const vd xc = _mm256_min_pd(_mm256_max_pd(x, vset(-745.0)), over);

    vd n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                           _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    vd r = _mm256_fnmadd_pd(n, c1, xc);
    r = _mm256_fnmadd_pd(n, c2, r);

    const vd r2 = _mm256_mul_pd(r, r);
    // r * P(r^2)
    vd p = vset(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, r2, vset(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, r2, vset(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);
    // Q(r^2)
    vd q = vset(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, r2, vset(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, r2, vset(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, r2, vset(2.00000000000000000005e0));

    vd e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    e = _mm256_fmadd_pd(vset(2.0), e, vset(1.0));

    // scale by 2^n via exponent-field arithmetic
    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    e = _mm256_mul_pd(e, _mm256_castsi256_pd(bits));

    e = _mm256_andnot_pd(_mm256_cmp_pd(xc, under, _CMP_LT_OQ), e);
    return e;
}

// ---------------------------------------------------------------------------
// sincos: pi/2 Cody-Waite reduction with a three-part constant; adequate for
// |x| up to ~1e8, far beyond the rho*t products the kernels produce.
// ---------------------------------------------------------------------------
inline void sincos_pd(vd x, vd* s_out, vd* c_out)
{
    const vd two_over_pi = vset(0.636619772367581343076);
    const vd p1 = vset(1.57079632673412561417e0);
    const vd p2 = vset(6.07710050650619224932e-11);
    const vd p3 = vset(2.02226624879595063154e-21);

    vd k = _mm256_round_pd(_mm256_mul_pd(x, two_over_pi),
                           _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    vd r = _mm256_fnmadd_pd(k, p1, x);
    r = _mm256_fnmadd_pd(k, p2, r);
    r = _mm256_fnmadd_pd(k, p3, r);

    const vd r2 = _mm256_mul_pd(r, r);

    vd sp = vset(1.58962301576546568060e-10);
    sp = _mm256_fmadd_pd(sp, r2, vset(-2.50507477628578072866e-8));
    sp = _mm256_fmadd_pd(sp, r2, vset(2.75573136213857245213e-6));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.98412698295895385996e-4));
    sp = _mm256_fmadd_pd(sp, r2, vset(8.33333333332211858878e-3));
    sp = _mm256_fmadd_pd(sp, r2, vset(-1.66666666666666307295e-1));
    vd sinr = _mm256_fmadd_pd(_mm256_mul_pd(sp, r2), r, r);

    vd cp = vset(-1.13585365213876817300e-11);
    cp = _mm256_fmadd_pd(cp, r2, vset(2.08757008419747316778e-9));
    cp = _mm256_fmadd_pd(cp, r2, vset(-2.75573141792967388112e-7));
    cp = _mm256_fmadd_pd(cp, r2, vset(2.48015872888517179954e-5));
    cp = _mm256_fmadd_pd(cp, r2, vset(-1.38888888888730564116e-3));
    cp = _mm256_fmadd_pd(cp, r2, vset(4.16666666666665929218e-2));
    vd cosr = _mm256_fmadd_pd(_mm256_mul_pd(cp, r2), r2,
                              _mm256_fnmadd_pd(r2, vset(0.5), vset(1.0)));

    // quadrant fixup: q = k mod 4
    __m128i k32 = _mm256_cvtpd_epi32(k);
    __m256i q = _mm256_cvtepi32_epi64(k32);
    __m256i bit0 = _mm256_and_si256(q, _mm256_set1_epi64x(1));
    __m256i bit1 = _mm256_and_si256(q, _mm256_set1_epi64x(2));

    vd swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit0, _mm256_set1_epi64x(1)));
    vd flip = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit1, _mm256_set1_epi64x(2)));

    vd s = _mm256_blendv_pd(sinr, cosr, swap);
    vd c = _mm256_blendv_pd(cosr, sinr, swap);

    const vd signmask = vset(-0.0);
    // sin negates in quadrants 2,3; cos in quadrants 1,2
    s = _mm256_xor_pd(s, _mm256_and_pd(flip, signmask));
    c = _mm256_xor_pd(c, _mm256_and_pd(_mm256_xor_pd(flip, swap), signmask));

    *s_out = s;
    *c_out = c;
}

// ---------------------------------------------------------------------------
// log: exponent/mantissa split plus rational kernel on [sqrt(1/2), sqrt(2)).
// Inputs are strictly positive normal numbers in the kernels' use.
// ---------------------------------------------------------------------------
inline vd log_pd(vd x)
{
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
    const __m256i half_bits = _mm256_set1_epi64x(0x3FE0000000000000ll);

    __m256i ix = _mm256_castpd_si256(x);
    __m256i biased = _mm256_srli_epi64(ix, 52);
    // exponent as double (values fit in int32)
    __m128i e32 = _mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(biased, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0)));
    vd e = _mm256_cvtepi32_pd(_mm_sub_epi32(e32, _mm_set1_epi32(1022)));

    vd m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(ix, mant_mask), half_bits));

    const vd sqrth = vset(0.70710678118654752440);
    vd below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    e = _mm256_add_pd(e, _mm256_and_pd(below, vset(-1.0)));
    vd madj = _mm256_add_pd(m, _mm256_and_pd(below, m)); // 2m where m < sqrt(1/2)
    vd t = _mm256_sub_pd(madj, vset(1.0));

    const vd z = _mm256_mul_pd(t, t);
    vd p = polevl5(t, 1.01875663804580931796e-4, 4.97494994976747001425e-1,
                   4.70579119878881725854e0, 1.44989225341610930846e1,
                   1.79368678507819816313e1, 7.70838733755885391666e0);
    vd q = vset(1.0);
    q = _mm256_fmadd_pd(q, t, vset(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, t, vset(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, t, vset(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, t, vset(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, t, vset(2.31251620126765340583e1));

    vd y = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(t, z), p), q);
    y = _mm256_fmadd_pd(e, vset(-2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(z, vset(0.5), y);
    return _mm256_fmadd_pd(e, vset(0.693359375), _mm256_add_pd(t, y));
}

// ---------------------------------------------------------------------------
// atan / atan2: Cephes three-interval reduction.
// ---------------------------------------------------------------------------
inline vd atan_pd(vd x)
{
    const vd signmask = vset(-0.0);
    const vd sign = _mm256_and_pd(x, signmask);
    vd a = _mm256_andnot_pd(signmask, x);

    const vd t3p8 = vset(2.41421356237309504880);
    const vd tp8 = vset(0.66);
    const vd morebits = vset(6.123233995736765886130e-17);

    vd big = _mm256_cmp_pd(a, t3p8, _CMP_GT_OQ);
    vd mid = _mm256_andnot_pd(big, _mm256_cmp_pd(a, tp8, _CMP_GT_OQ));

    // big:  u = -1/a,          base = pi/2
    // mid:  u = (a-1)/(a+1),   base = pi/4
    // else: u = a,             base = 0
    vd u_big = _mm256_div_pd(vset(-1.0), a);
    vd u_mid = _mm256_div_pd(_mm256_sub_pd(a, vset(1.0)), _mm256_add_pd(a, vset(1.0)));
    vd u = _mm256_blendv_pd(a, u_mid, mid);
    u = _mm256_blendv_pd(u, u_big, big);

    vd base = _mm256_and_pd(mid, vset(7.85398163397448309616e-1));
    base = _mm256_blendv_pd(base, vset(1.57079632679489661923e0), big);

    const vd z = _mm256_mul_pd(u, u);
    vd p = vset(-8.750608600031904122785e-1);
    p = _mm256_fmadd_pd(p, z, vset(-1.615753718733365076637e1));
    p = _mm256_fmadd_pd(p, z, vset(-7.500855792314704667340e1));
    p = _mm256_fmadd_pd(p, z, vset(-1.228866684490136173410e2));
    p = _mm256_fmadd_pd(p, z, vset(-6.485021904942025371773e1));
    vd q = vset(1.0);
    q = _mm256_fmadd_pd(q, z, vset(2.485846490142306297962e1));
    q = _mm256_fmadd_pd(q, z, vset(1.650270098316988542046e2));
    q = _mm256_fmadd_pd(q, z, vset(4.328810604912902668951e2));
    q = _mm256_fmadd_pd(q, z, vset(4.853903996359136964868e2));
    q = _mm256_fmadd_pd(q, z, vset(1.945506571482613964425e2));

    vd w = _mm256_div_pd(_mm256_mul_pd(z, p), q);
    w = _mm256_fmadd_pd(w, u, u);
    w = _mm256_add_pd(w, _mm256_and_pd(big, _mm256_mul_pd(vset(0.5), morebits)));
    w = _mm256_add_pd(w, _mm256_and_pd(mid, morebits));

    return _mm256_xor_pd(_mm256_add_pd(base, w), sign);
}

inline vd atan2_pd(vd y, vd x)
{
    const vd signmask = vset(-0.0);
    const vd pi = vset(3.14159265358979323846);
    const vd halfpi = vset(1.57079632679489661923);

    vd base = atan_pd(_mm256_div_pd(y, x));

    vd xneg = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_LT_OQ);
    vd ysign = _mm256_and_pd(y, signmask);
    base = _mm256_add_pd(base, _mm256_and_pd(xneg, _mm256_xor_pd(pi, ysign)));

    // x == 0: +-pi/2 by the sign of y
    vd xzero = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_EQ_OQ);
    base = _mm256_blendv_pd(base, _mm256_xor_pd(halfpi, ysign), xzero);
    return base;
}

inline vd hypot_pd(vd a, vd b)
{
    // kernels keep |a|,|b| well inside the overflow range; plain form is fine
    return _mm256_sqrt_pd(_mm256_fmadd_pd(a, a, _mm256_mul_pd(b, b)));
}

} // namespace angmax::kernels::avx2
