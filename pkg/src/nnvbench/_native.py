"""All numba-compiled primitives in one translation unit.

Numba's on-disk cache is stamped per source file and does not track
cross-file call dependencies, so every jitted function that calls another
jitted function lives here: editing this file invalidates the whole cache
domain at once. Python-facing wrappers live in fmath/ and model/.

Contents: binary32 math kernels transcribed from the musl libm float
routines (FDLIBM/FreeBSD msun lineage, the same sources vendored as C text
under nnvbench/emit/models/musl), their batch drivers, and the network
batch evaluator. Every arithmetic step keeps the original operation order
and precision: f32 ops stay f32, the sin/cos kernels run in f64 exactly
like the C, dot products accumulate a single f32 in ascending index order,
and no FMA is introduced anywhere (no fastmath, so LLVM contraction stays
off).
"""

from __future__ import annotations

import numpy as np
from numba import njit

U32 = np.uint32
I32 = np.int32
F32 = np.float32
F64 = np.float64

_jit = njit(inline="always", error_model="numpy", cache=True)
_jitfn = njit(error_model="numpy", cache=True)

F0 = F32(0.0)
F1 = F32(1.0)
F2 = F32(2.0)
F3 = F32(3.0)
F6 = F32(6.0)
F05 = F32(0.5)
FN05 = F32(-0.5)
FN1 = F32(-1.0)
F025 = F32(0.25)
FN025 = F32(-0.25)
F0125 = F32(0.125)
F8 = F32(8.0)

X1P127F = U32(0x7F000000).view(F32)  # 0x1p127
X1P_120F = U32(0x03800000).view(F32)  # 0x1p-120
X1P25F = U32(0x4C000000).view(F32)  # 0x1p25
X1P24 = F64(16777216.0)
X1P_24 = F64(5.9604644775390625e-08)

SQRT2F = U32(0x3FB504F3).view(F32)  # float32 nearest sqrt(2), used by GELU


@_jit
def _bits(x):
    return np.float32(x).view(np.uint32)


@_jit
def _from_bits(b):
    return np.uint32(b).view(np.float32)


@_jit
def _dbits(x):
    return np.float64(x).view(np.uint64)


@_jit
def _from_dbits(b):
    return np.uint64(b).view(np.float64)


# ---------------------------------------------------------------------------
# scalbnf / scalbn (musl src/math/scalbnf.c, scalbn.c)
# ---------------------------------------------------------------------------

X1P_126F = U32(0x00800000).view(F32)
X1P24F = U32(0x4B800000).view(F32)
X1P1023 = np.uint64(0x7FE0000000000000).view(F64)
X1P_1022 = np.uint64(0x0010000000000000).view(F64)
X1P53 = F64(9007199254740992.0)


@_jit
def scalbnf(x, n):
    y = x
    if n > 127:
        y = y * X1P127F
        n -= 127
        if n > 127:
            y = y * X1P127F
            n -= 127
            if n > 127:
                n = 127
    elif n < -126:
        y = y * (X1P_126F * X1P24F)
        n += 126 - 24
        if n < -126:
            y = y * (X1P_126F * X1P24F)
            n += 126 - 24
            if n < -126:
                n = -126
    return y * _from_bits(np.uint32(0x7F + n) << np.uint32(23))


@_jit
def scalbn(x, n):
    y = x
    if n > 1023:
        y = y * X1P1023
        n -= 1023
        if n > 1023:
            y = y * X1P1023
            n -= 1023
            if n > 1023:
                n = 1023
    elif n < -1022:
        y = y * (X1P_1022 * X1P53)
        n += 1022 - 53
        if n < -1022:
            y = y * (X1P_1022 * X1P53)
            n += 1022 - 53
            if n < -1022:
                n = -1022
    return y * _from_dbits(np.uint64(0x3FF + n) << np.uint64(52))


# ---------------------------------------------------------------------------
# fabsf / fmaxf (musl src/math/fabsf.c, fmaxf.c)
# ---------------------------------------------------------------------------


@_jit
def fabsf(x):
    return _from_bits(_bits(x) & U32(0x7FFFFFFF))


@_jit
def fmaxf(x, y):
    if x != x:
        return y
    if y != y:
        return x
    sx = _bits(x) >> U32(31)
    sy = _bits(y) >> U32(31)
    if sx != sy:
        return y if sx != U32(0) else x
    return y if x < y else x


# ---------------------------------------------------------------------------
# sqrtf: correctly rounded (hardware); identical to the vendored bit-by-bit
# FDLIBM e_sqrtf.c in round-to-nearest.
# ---------------------------------------------------------------------------


@_jit
def sqrtf(x):
    return np.sqrt(np.float32(x))


# ---------------------------------------------------------------------------
# expf (musl src/math/expf.c, FreeBSD e_expf.c)
# ---------------------------------------------------------------------------

EXPF_LN2_HI = F32(6.9314575195e-01)  # 0x3f317200
EXPF_LN2_LO = F32(1.4286067653e-06)  # 0x35bfbe8e
EXPF_INV_LN2 = F32(1.4426950216e+00)  # 0x3fb8aa3b
EXPF_P1 = F32(1.6666625440e-1)
EXPF_P2 = F32(-2.7667332906e-3)


@_jit
def expf(x):
    hx = _bits(x)
    sign = hx >> U32(31)
    hx = hx & U32(0x7FFFFFFF)

    if hx >= U32(0x42AEAC50):  # |x| >= -87.33655f or NaN
        if hx > U32(0x7F800000):
            return x  # NaN
        if hx >= U32(0x42B17218) and sign == U32(0):
            return x * X1P127F  # overflow
        if sign != U32(0) and hx >= U32(0x42CFF1B5):  # x <= -103.972084f
            return F0  # underflow

    if hx > U32(0x3EB17218):  # |x| > 0.5 ln2
        if hx > U32(0x3F851592):  # |x| > 1.5 ln2
            half = F05 if sign == U32(0) else FN05
            k = I32(EXPF_INV_LN2 * x + half)
        else:
            k = I32(1) - I32(sign) - I32(sign)
        kf = F32(k)
        hi = x - kf * EXPF_LN2_HI  # k*ln2hi is exact here
        lo = kf * EXPF_LN2_LO
        x = hi - lo
    elif hx > U32(0x39000000):  # |x| > 2**-14
        k = I32(0)
        hi = x
        lo = F0
    else:
        return F1 + x

    xx = x * x
    c = x - xx * (EXPF_P1 + xx * EXPF_P2)
    y = F1 + (x * c / (F2 - c) - lo + hi)
    if k == I32(0):
        return y
    return scalbnf(y, k)


# ---------------------------------------------------------------------------
# expm1f (musl src/math/expm1f.c, FreeBSD s_expm1f.c)
# ---------------------------------------------------------------------------

EM1_LN2_HI = F32(6.9313812256e-01)  # 0x3f317180
EM1_LN2_LO = F32(9.0580006145e-06)  # 0x3717f7d1
EM1_INV_LN2 = F32(1.4426950216e+00)  # 0x3fb8aa3b
EM1_Q1 = F32(-3.3333212137e-2)
EM1_Q2 = F32(1.5807170421e-3)


@_jit
def expm1f(x):
    hx = _bits(x)
    sign = (hx >> U32(31)) != U32(0)
    hx = hx & U32(0x7FFFFFFF)

    if hx >= U32(0x4195B844):  # |x| >= 27*ln2
        if hx > U32(0x7F800000):
            return x  # NaN
        if sign:
            return FN1
        if hx > U32(0x42B17217):  # x > log(FLT_MAX)
            return x * X1P127F

    c = F0
    if hx > U32(0x3EB17218):  # |x| > 0.5 ln2
        if hx < U32(0x3F851592):  # |x| < 1.5 ln2
            if not sign:
                hi = x - EM1_LN2_HI
                lo = EM1_LN2_LO
                k = I32(1)
            else:
                hi = x + EM1_LN2_HI
                lo = -EM1_LN2_LO
                k = I32(-1)
        else:
            half = FN05 if sign else F05
            k = I32(EM1_INV_LN2 * x + half)
            t = F32(k)
            hi = x - t * EM1_LN2_HI  # t*ln2_hi is exact here
            lo = t * EM1_LN2_LO
        x = hi - lo
        c = (hi - x) - lo
    elif hx < U32(0x33000000):  # |x| < 2**-25
        return x
    else:
        k = I32(0)

    hfx = F05 * x
    hxs = x * hfx
    r1 = F1 + hxs * (EM1_Q1 + hxs * EM1_Q2)
    t = F3 - r1 * hfx
    e = hxs * ((r1 - t) / (F6 - x * t))
    if k == I32(0):
        return x - (x * e - hxs)  # c is 0
    e = x * (e - c) - c
    e = e - hxs
    if k == I32(-1):
        return F05 * (x - e) - F05
    if k == I32(1):
        if x < FN025:
            return -F2 * (e - (x + F05))
        return F1 + F2 * (x - e)
    twopk = _from_bits(np.uint32(0x7F + k) << np.uint32(23))  # 2^k
    if k < I32(0) or k > I32(56):
        y = x - e + F1
        if k == I32(128):
            y = y * F2 * X1P127F
        else:
            y = y * twopk
        return y - F1
    uf = _from_bits(np.uint32(0x7F - k) << np.uint32(23))  # 2^-k
    if k < I32(23):
        return (x - e + (F1 - uf)) * twopk
    return (x - (e + uf) + F1) * twopk


# ---------------------------------------------------------------------------
# logf (musl src/math/logf.c, FreeBSD e_logf.c)
# ---------------------------------------------------------------------------

LOGF_LN2_HI = F32(6.9313812256e-01)  # 0x3f317180
LOGF_LN2_LO = F32(9.0580006145e-06)  # 0x3717f7d1
LOGF_LG1 = F32(0.66666662693)  # 0xaaaaaa.0p-24
LOGF_LG2 = F32(0.40000972152)  # 0xccce13.0p-25
LOGF_LG3 = F32(0.28498786688)  # 0x91e9ee.0p-25
LOGF_LG4 = F32(0.24279078841)  # 0xf89e26.0p-26


@_jit
def logf(x):
    ix = _bits(x)
    k = I32(0)

    if ix < U32(0x00800000) or (ix >> U32(31)) != U32(0):
        if (ix & U32(0x7FFFFFFF)) == U32(0):
            return FN1 / (x * x)  # log(+-0) = -inf
        if (ix >> U32(31)) != U32(0):
            return (x - x) / F0  # log(-#) = NaN
        # subnormal, scale up x
        k -= I32(25)
        x = x * X1P25F
        ix = _bits(x)
    elif ix >= U32(0x7F800000):
        return x
    elif ix == U32(0x3F800000):
        return F0

    # reduce x into [sqrt(2)/2, sqrt(2)]
    ix += U32(0x3F800000) - U32(0x3F3504F3)
    k += I32(ix >> U32(23)) - I32(0x7F)
    ix = (ix & U32(0x007FFFFF)) + U32(0x3F3504F3)
    x = _from_bits(ix)

    f = x - F1
    s = f / (F2 + f)
    z = s * s
    w = z * z
    t1 = w * (LOGF_LG2 + w * LOGF_LG4)
    t2 = z * (LOGF_LG1 + w * LOGF_LG3)
    r = t2 + t1
    hfsq = F05 * f * f
    dk = F32(k)
    return s * (hfsq + r) + dk * LOGF_LN2_LO - hfsq + f + dk * LOGF_LN2_HI


# ---------------------------------------------------------------------------
# log1pf (musl src/math/log1pf.c, FreeBSD s_log1pf.c)
# ---------------------------------------------------------------------------


@_jit
def log1pf(x):
    ix = _bits(x)
    k = I32(1)
    f = F0
    c = F0
    ui = ix

    if ix < U32(0x3ED413D0) or (ix >> U32(31)) != U32(0):  # 1+x < sqrt(2)+
        if ix >= U32(0xBF800000):  # x <= -1.0
            if x == FN1:
                return x / F0  # log1p(-1) = -inf
            return (x - x) / F0  # log1p(x<-1) = NaN
        if (ix & U32(0x7FFFFFFF)) < U32(0x33800000):  # |x| < 2**-24
            return x
        if ix <= U32(0xBE95F619):  # sqrt(2)/2- <= 1+x < sqrt(2)+
            k = I32(0)
            c = F0
            f = x
    elif ix >= U32(0x7F800000):
        return x

    if k > I32(0):
        uf = F1 + x
        ui = _bits(uf)
        iu = ui + (U32(0x3F800000) - U32(0x3F3504F3))
        k = I32(iu >> U32(23)) - I32(0x7F)
        # correction term ~ log(1+x) - log(u), avoid underflow in c/u
        if k < I32(25):
            if k >= I32(2):
                c = F1 - (_from_bits(ui) - x)
            else:
                c = x - (_from_bits(ui) - F1)
            c = c / _from_bits(ui)
        else:
            c = F0
        # reduce u into [sqrt(2)/2, sqrt(2)]
        iu = (iu & U32(0x007FFFFF)) + U32(0x3F3504F3)
        ui = iu
        f = _from_bits(ui) - F1

    s = f / (F2 + f)
    z = s * s
    w = z * z
    t1 = w * (LOGF_LG2 + w * LOGF_LG4)
    t2 = z * (LOGF_LG1 + w * LOGF_LG3)
    r = t2 + t1
    hfsq = F05 * f * f
    dk = F32(k)
    return s * (hfsq + r) + (dk * LOGF_LN2_LO + c) - hfsq + f + dk * LOGF_LN2_HI


# ---------------------------------------------------------------------------
# tanhf (musl src/math/tanhf.c)
# ---------------------------------------------------------------------------


@_jit
def tanhf(x):
    ix = _bits(x)
    sign = (ix >> U32(31)) != U32(0)
    ix = ix & U32(0x7FFFFFFF)
    ax = _from_bits(ix)

    if ix > U32(0x3F0C9F54):  # |x| > log(3)/2 ~= 0.5493 or nan
        if ix > U32(0x41200000):  # |x| > 10
            tt = F1 + F0 / ax
        else:
            t = expm1f(F2 * ax)
            tt = F1 - F2 / (t + F2)
    elif ix > U32(0x3E82C578):  # |x| > log(5/3)/2 ~= 0.2554
        t = expm1f(F2 * ax)
        tt = t / (t + F2)
    elif ix >= U32(0x00800000):  # |x| >= 0x1p-126
        t = expm1f(-F2 * ax)
        tt = -t / (t + F2)
    else:  # subnormal
        tt = ax
    return -tt if sign else tt


# ---------------------------------------------------------------------------
# erff (musl src/math/erff.c, FreeBSD s_erff.c)
# ---------------------------------------------------------------------------

ERF_ERX = F32(8.4506291151e-01)  # 0x3f58560b
ERF_EFX8 = F32(1.0270333290e+00)  # 0x3f8375d4
ERF_PP0 = F32(1.2837916613e-01)
ERF_PP1 = F32(-3.2504209876e-01)
ERF_PP2 = F32(-2.8481749818e-02)
ERF_PP3 = F32(-5.7702702470e-03)
ERF_PP4 = F32(-2.3763017452e-05)
ERF_QQ1 = F32(3.9791721106e-01)
ERF_QQ2 = F32(6.5022252500e-02)
ERF_QQ3 = F32(5.0813062117e-03)
ERF_QQ4 = F32(1.3249473704e-04)
ERF_QQ5 = F32(-3.9602282413e-06)
ERF_PA0 = F32(-2.3621185683e-03)
ERF_PA1 = F32(4.1485610604e-01)
ERF_PA2 = F32(-3.7220788002e-01)
ERF_PA3 = F32(3.1834661961e-01)
ERF_PA4 = F32(-1.1089469492e-01)
ERF_PA5 = F32(3.5478305072e-02)
ERF_PA6 = F32(-2.1663755178e-03)
ERF_QA1 = F32(1.0642088205e-01)
ERF_QA2 = F32(5.4039794207e-01)
ERF_QA3 = F32(7.1828655899e-02)
ERF_QA4 = F32(1.2617121637e-01)
ERF_QA5 = F32(1.3637083583e-02)
ERF_QA6 = F32(1.1984500103e-02)
ERF_RA0 = F32(-9.8649440333e-03)
ERF_RA1 = F32(-6.9385856390e-01)
ERF_RA2 = F32(-1.0558626175e+01)
ERF_RA3 = F32(-6.2375331879e+01)
ERF_RA4 = F32(-1.6239666748e+02)
ERF_RA5 = F32(-1.8460508728e+02)
ERF_RA6 = F32(-8.1287437439e+01)
ERF_RA7 = F32(-9.8143291473e+00)
ERF_SA1 = F32(1.9651271820e+01)
ERF_SA2 = F32(1.3765776062e+02)
ERF_SA3 = F32(4.3456588745e+02)
ERF_SA4 = F32(6.4538726807e+02)
ERF_SA5 = F32(4.2900814819e+02)
ERF_SA6 = F32(1.0863500214e+02)
ERF_SA7 = F32(6.5702495575e+00)
ERF_SA8 = F32(-6.0424413532e-02)
ERF_RB0 = F32(-9.8649431020e-03)
ERF_RB1 = F32(-7.9928326607e-01)
ERF_RB2 = F32(-1.7757955551e+01)
ERF_RB3 = F32(-1.6063638306e+02)
ERF_RB4 = F32(-6.3756646729e+02)
ERF_RB5 = F32(-1.0250950928e+03)
ERF_RB6 = F32(-4.8351919556e+02)
ERF_SB1 = F32(3.0338060379e+01)
ERF_SB2 = F32(3.2579251099e+02)
ERF_SB3 = F32(1.5367296143e+03)
ERF_SB4 = F32(3.1998581543e+03)
ERF_SB5 = F32(2.5530502930e+03)
ERF_SB6 = F32(4.7452853394e+02)
ERF_SB7 = F32(-2.2440952301e+01)


@_jit
def _erfc1(x):
    s = fabsf(x) - F1
    p = ERF_PA0 + s * (ERF_PA1 + s * (ERF_PA2 + s * (ERF_PA3 + s * (ERF_PA4 + s * (ERF_PA5 + s * ERF_PA6)))))
    q = F1 + s * (ERF_QA1 + s * (ERF_QA2 + s * (ERF_QA3 + s * (ERF_QA4 + s * (ERF_QA5 + s * ERF_QA6)))))
    return F1 - ERF_ERX - p / q


@_jit
def _erfc2(ix, x):
    if ix < U32(0x3FA00000):  # |x| < 1.25
        return _erfc1(x)
    x = fabsf(x)
    s = F1 / (x * x)
    if ix < U32(0x4036DB6D):  # |x| < 1/0.35
        r = ERF_RA0 + s * (ERF_RA1 + s * (ERF_RA2 + s * (ERF_RA3 + s * (ERF_RA4 + s * (ERF_RA5 + s * (ERF_RA6 + s * ERF_RA7))))))
        big_s = F1 + s * (ERF_SA1 + s * (ERF_SA2 + s * (ERF_SA3 + s * (ERF_SA4 + s * (ERF_SA5 + s * (ERF_SA6 + s * (ERF_SA7 + s * ERF_SA8)))))))
    else:  # |x| >= 1/0.35
        r = ERF_RB0 + s * (ERF_RB1 + s * (ERF_RB2 + s * (ERF_RB3 + s * (ERF_RB4 + s * (ERF_RB5 + s * ERF_RB6)))))
        big_s = F1 + s * (ERF_SB1 + s * (ERF_SB2 + s * (ERF_SB3 + s * (ERF_SB4 + s * (ERF_SB5 + s * (ERF_SB6 + s * ERF_SB7))))))
    ix = _bits(x)
    z = _from_bits(ix & U32(0xFFFFE000))
    return expf(-z * z - F32(0.5625)) * expf((z - x) * (z + x) + r / big_s) / x


@_jit
def erff(x):
    ix = _bits(x)
    sign = (ix >> U32(31)) != U32(0)
    ix = ix & U32(0x7FFFFFFF)
    if ix >= U32(0x7F800000):
        # erf(nan)=nan, erf(+-inf)=+-1
        sf = F1 if sign else F0
        return F1 - F2 * sf + F1 / x
    if ix < U32(0x3F580000):  # |x| < 0.84375
        if ix < U32(0x31800000):  # |x| < 2**-28
            return F0125 * (F8 * x + ERF_EFX8 * x)
        z = x * x
        r = ERF_PP0 + z * (ERF_PP1 + z * (ERF_PP2 + z * (ERF_PP3 + z * ERF_PP4)))
        s = F1 + z * (ERF_QQ1 + z * (ERF_QQ2 + z * (ERF_QQ3 + z * (ERF_QQ4 + z * ERF_QQ5))))
        y = r / s
        return x + x * y
    if ix < U32(0x40C00000):  # |x| < 6
        y = F1 - _erfc2(ix, x)
    else:
        y = F1 - X1P_120F
    return -y if sign else y


# ---------------------------------------------------------------------------
# sinf / cosf (musl src/math/{sinf,cosf}.c with __sindf/__cosdf kernels and
# __rem_pio2f/__rem_pio2_large reduction)
# ---------------------------------------------------------------------------

KS1 = F64(-0.166666666416265235595)  # -0x15555554cbac77.0p-55
KS2 = F64(0.0083333293858894631756)
KS3 = F64(-0.000198393348360966317347)
KS4 = F64(0.0000027183114939898219064)
KC0 = F64(-0.499999997251031003120)
KC1 = F64(0.0416666233237390631894)
KC2 = F64(-0.00138867637746099294692)
KC3 = F64(0.0000243904487962774090654)

D1 = F64(1.0)


@_jit
def _k_sinf(x):
    z = x * x
    w = z * z
    r = KS3 + z * KS4
    s = z * x
    return F32((x + s * (KS1 + z * KS2)) + s * w * r)


@_jit
def _k_cosf(x):
    z = x * x
    w = z * z
    r = KC2 + z * KC3
    return F32(((D1 + z * KC0) + w * KC1) + (w * z) * r)


TOINT = F64(6755399441055744.0)  # 1.5 / DBL_EPSILON
INV_PIO2 = F64(6.36619772367581382433e-01)  # 53 bits of 2/pi
PIO2_1 = F64(1.57079631090164184570e+00)  # first 25 bits of pi/2
PIO2_1T = F64(1.58932547735281966916e-08)  # pi/2 - pio2_1

FRAC_PI_2 = F64(1.5707963267948966)
S1_PIO2 = F64(1.0) * FRAC_PI_2
S2_PIO2 = F64(2.0) * FRAC_PI_2
S3_PIO2 = F64(3.0) * FRAC_PI_2
S4_PIO2 = F64(4.0) * FRAC_PI_2

IPIO2 = np.array([
    0xA2F983, 0x6E4E44, 0x1529FC, 0x2757D1, 0xF534DD, 0xC0DB62, 0x95993C,
    0x439041, 0xFE5163, 0xABDEBB, 0xC561B7, 0x246E3A, 0x424DD2, 0xE00649,
    0x2EEA09, 0xD1921C, 0xFE1DEB, 0x1CB129, 0xA73EE8, 0x8235F5, 0x2EBB44,
    0x84E99C, 0x7026B4, 0x5F7E41, 0x3991D6, 0x398353, 0x39F49C, 0x845F8B,
    0xBDF928, 0x3B1FF8, 0x97FFDE, 0x05980F, 0xEF2F11, 0x8B5A0A, 0x6D1F6D,
    0x367ECF, 0x27CB09, 0xB74F46, 0x3F669E, 0x5FEA2D, 0x7527BA, 0xC7EBE5,
    0xF17B3D, 0x0739F7, 0x8A5292, 0xEA6BFB, 0x5FB11F, 0x8D5D08, 0x560330,
    0x46FC7B, 0x6BABF0, 0xCFBC20, 0x9AF436, 0x1DA9E3, 0x91615E, 0xE61B08,
    0x659985, 0x5F14A0, 0x68408D, 0xFFD880, 0x4D7327, 0x310606, 0x1556CA,
    0x73A8C9, 0x60E27B, 0xC08C6B,
], dtype=np.int32)

PIO2S = np.array([
    1.57079625129699707031e+00, 7.54978941586159635335e-08,
    5.39030252995776476554e-15, 3.28200341580791294123e-22,
    1.27065575308067607349e-29, 1.22933308981111328932e-36,
    2.73370053816464559624e-44, 2.16741683877804819444e-51,
], dtype=np.float64)


@_jit
def _rem_pio2_large1(tx, e0, f, q, fq, iq):
    """Payne-Hanek reduction, specialized to one 24-bit input chunk (nx=1)
    and single precision (prec=0). Scratch arrays are caller-provided.
    Returns (n & 7, y0).
    """
    jk = 3  # INIT_JK[0]
    jp = jk
    jx = 0
    jv = (e0 - 3) // 24
    if jv < 0:
        jv = 0
    q0 = e0 - 24 * (jv + 1)

    # set up f[0..jx+jk]
    j = jv - jx
    m = jx + jk
    for i in range(m + 1):
        f[i] = F64(0.0) if j < 0 else F64(IPIO2[j])
        j += 1

    # q[0..jk]
    for i in range(jk + 1):
        fw = F64(0.0)
        for jj in range(jx + 1):
            fw += tx * f[jx + i - jj]
        q[i] = fw

    jz = jk
    n = 0
    ih = 0
    z = F64(0.0)
    while True:  # recompute loop
        i = 0
        z = q[jz]
        for j2 in range(jz, 0, -1):
            fw = F64(np.int32(X1P_24 * z))
            iq[i] = np.int32(z - X1P24 * fw)
            z = q[j2 - 1] + fw
            i += 1

        # compute n
        z = scalbn(z, q0)
        z -= F64(8.0) * np.floor(z * F64(0.125))
        n = np.int32(z)
        z -= F64(n)
        ih = 0
        if q0 > 0:
            i = iq[jz - 1] >> (24 - q0)
            n += i
            iq[jz - 1] -= i << (24 - q0)
            ih = iq[jz - 1] >> (23 - q0)
        elif q0 == 0:
            ih = iq[jz - 1] >> 23
        elif z >= F64(0.5):
            ih = 2

        if ih > 0:  # q > 0.5
            n += 1
            carry = 0
            for i2 in range(jz):  # compute 1-q
                j3 = iq[i2]
                if carry == 0:
                    if j3 != 0:
                        carry = 1
                        iq[i2] = 0x1000000 - j3
                else:
                    iq[i2] = 0xFFFFFF - j3
            if q0 > 0:
                if q0 == 1:
                    iq[jz - 1] &= 0x7FFFFF
                elif q0 == 2:
                    iq[jz - 1] &= 0x3FFFFF
            if ih == 2:
                z = F64(1.0) - z
                if carry != 0:
                    z -= scalbn(F64(1.0), q0)

        # check if recomputation is needed
        if z == F64(0.0):
            j4 = 0
            for i3 in range(jz - 1, jk - 1, -1):
                j4 |= iq[i3]
            if j4 == 0:
                k = 1
                while iq[jk - k] == 0:
                    k += 1
                for i4 in range(jz + 1, jz + k + 1):
                    f[jx + i4] = F64(IPIO2[jv + i4])
                    fw = F64(0.0)
                    for jj in range(jx + 1):
                        fw += tx * f[jx + i4 - jj]
                    q[i4] = fw
                jz += k
                continue
        break

    # chop off zero terms
    if z == F64(0.0):
        jz -= 1
        q0 -= 24
        while iq[jz] == 0:
            jz -= 1
            q0 -= 24
    else:
        z = scalbn(z, -q0)
        if z >= X1P24:
            fw = F64(np.int32(X1P_24 * z))
            iq[jz] = np.int32(z - X1P24 * fw)
            jz += 1
            q0 += 24
            iq[jz] = np.int32(fw)
        else:
            iq[jz] = np.int32(z)

    # convert integer "bit" chunks to floating-point values
    fw = scalbn(F64(1.0), q0)
    for i5 in range(jz, -1, -1):
        q[i5] = fw * F64(iq[i5])
        fw *= X1P_24

    # compute PIO2S[0..jp] * q[jz..0]
    for i6 in range(jz, -1, -1):
        fw = F64(0.0)
        k2 = 0
        while k2 <= jp and k2 <= jz - i6:
            fw += PIO2S[k2] * q[i6 + k2]
            k2 += 1
        fq[jz - i6] = fw

    # compress fq into y (prec=0)
    fw = F64(0.0)
    for i7 in range(jz, -1, -1):
        fw += fq[i7]
    y0 = fw if ih == 0 else -fw
    return n & 7, y0


@_jit
def _rem_pio2f(x, f, q, fq, iq):
    """Return (n, y) with y = x - n*pi/2, |y| ~<= pi/4."""
    x64 = F64(x)
    ix = _bits(x) & U32(0x7FFFFFFF)
    if ix < U32(0x4DC90FDB):  # |x| ~< 2^28*(pi/2), medium size
        tmp = x64 * INV_PIO2 + TOINT
        f_n = tmp - TOINT
        n = np.int32(f_n)
        return n, x64 - f_n * PIO2_1 - f_n * PIO2_1T
    if ix >= U32(0x7F800000):  # inf or NaN
        return np.int32(0), x64 - x64
    # scale x into [2^23, 2^24-1]
    sign = (_bits(x) >> U32(31)) != U32(0)
    e0 = np.int32((ix >> U32(23)) - U32(0x7F + 23))
    tx = F64(_from_bits(ix - (np.uint32(e0) << U32(23))))
    n, ty = _rem_pio2_large1(tx, e0, f, q, fq, iq)
    if sign:
        return -n, -ty
    return n, ty


@_jit
def _sinf_inner(x, f, q, fq, iq):
    x64 = F64(x)
    ix = _bits(x)
    sign = (ix >> U32(31)) != U32(0)
    ix = ix & U32(0x7FFFFFFF)

    if ix <= U32(0x3F490FDA):  # |x| ~<= pi/4
        if ix < U32(0x39800000):  # |x| < 2**-12
            return x
        return _k_sinf(x64)
    if ix <= U32(0x407B53D1):  # |x| ~<= 5*pi/4
        if ix <= U32(0x4016CBE3):  # |x| ~<= 3pi/4
            if sign:
                return -_k_cosf(x64 + S1_PIO2)
            return _k_cosf(x64 - S1_PIO2)
        return _k_sinf(-(x64 + S2_PIO2) if sign else -(x64 - S2_PIO2))
    if ix <= U32(0x40E231D5):  # |x| ~<= 9*pi/4
        if ix <= U32(0x40AFEDDF):  # |x| ~<= 7*pi/4
            if sign:
                return _k_cosf(x64 + S3_PIO2)
            return -_k_cosf(x64 - S3_PIO2)
        return _k_sinf((x64 + S4_PIO2) if sign else (x64 - S4_PIO2))

    if ix >= U32(0x7F800000):  # inf or NaN
        return x - x

    n, y = _rem_pio2f(x, f, q, fq, iq)
    m = n & np.int32(3)
    if m == 0:
        return _k_sinf(y)
    if m == 1:
        return _k_cosf(y)
    if m == 2:
        return _k_sinf(-y)
    return -_k_cosf(y)


@_jit
def _cosf_inner(x, f, q, fq, iq):
    x64 = F64(x)
    ix = _bits(x)
    sign = (ix >> U32(31)) != U32(0)
    ix = ix & U32(0x7FFFFFFF)

    if ix <= U32(0x3F490FDA):  # |x| ~<= pi/4
        if ix < U32(0x39800000):  # |x| < 2**-12
            return F1
        return _k_cosf(x64)
    if ix <= U32(0x407B53D1):  # |x| ~<= 5*pi/4
        if ix > U32(0x4016CBE3):  # |x| ~> 3*pi/4
            return -_k_cosf((x64 + S2_PIO2) if sign else (x64 - S2_PIO2))
        if sign:
            return _k_sinf(x64 + S1_PIO2)
        return _k_sinf(S1_PIO2 - x64)
    if ix <= U32(0x40E231D5):  # |x| ~<= 9*pi/4
        if ix > U32(0x40AFEDDF):  # |x| ~> 7*pi/4
            return _k_cosf((x64 + S4_PIO2) if sign else (x64 - S4_PIO2))
        if sign:
            return _k_sinf(-x64 - S3_PIO2)
        return _k_sinf(x64 - S3_PIO2)

    if ix >= U32(0x7F800000):  # inf or NaN
        return x - x

    n, y = _rem_pio2f(x, f, q, fq, iq)
    m = n & np.int32(3)
    if m == 0:
        return _k_cosf(y)
    if m == 1:
        return _k_sinf(-y)
    if m == 2:
        return -_k_cosf(y)
    return _k_sinf(y)


@_jitfn
def sinf(x):
    f = np.empty(20, dtype=np.float64)
    q = np.empty(20, dtype=np.float64)
    fq = np.empty(20, dtype=np.float64)
    iq = np.empty(20, dtype=np.int32)
    return _sinf_inner(F32(x), f, q, fq, iq)


@_jitfn
def cosf(x):
    f = np.empty(20, dtype=np.float64)
    q = np.empty(20, dtype=np.float64)
    fq = np.empty(20, dtype=np.float64)
    iq = np.empty(20, dtype=np.int32)
    return _cosf_inner(F32(x), f, q, fq, iq)


# ---------------------------------------------------------------------------
# acosf / asinf (musl src/math/{acosf,asinf}.c)
# ---------------------------------------------------------------------------

ACOS_PIO2_HI = F32(1.5707962513e+00)  # 0x3fc90fda
ACOS_PIO2_LO = F32(7.5497894159e-08)  # 0x33a22168
ASIN_P_S0 = F32(1.6666586697e-01)
ASIN_P_S1 = F32(-4.2743422091e-02)
ASIN_P_S2 = F32(-8.6563630030e-03)
ASIN_Q_S1 = F32(-7.0662963390e-01)
ASIN_PIO2 = F64(1.570796326794896558e+00)
X1P_120D = F64(7.52316384526264005e-37)  # 0x1p-120


@_jit
def _asin_r(z):
    p = z * (ASIN_P_S0 + z * (ASIN_P_S1 + z * ASIN_P_S2))
    q = F1 + z * ASIN_Q_S1
    return p / q


@_jit
def acosf(x):
    hx = _bits(x)
    ix = hx & U32(0x7FFFFFFF)
    if ix >= U32(0x3F800000):  # |x| >= 1 or nan
        if ix == U32(0x3F800000):
            if (hx >> U32(31)) != U32(0):
                return F2 * ACOS_PIO2_HI + X1P_120F
            return F0
        return F0 / (x - x)
    if ix < U32(0x3F000000):  # |x| < 0.5
        if ix <= U32(0x32800000):  # |x| < 2**-26
            return ACOS_PIO2_HI + X1P_120F
        return ACOS_PIO2_HI - (x - (ACOS_PIO2_LO - x * _asin_r(x * x)))
    if (hx >> U32(31)) != U32(0):  # x < -0.5
        z = (F1 + x) * F05
        s = sqrtf(z)
        w = _asin_r(z) * s - ACOS_PIO2_LO
        return F2 * (ACOS_PIO2_HI - (s + w))
    # x > 0.5
    z = (F1 - x) * F05
    s = sqrtf(z)
    hx2 = _bits(s)
    df = _from_bits(hx2 & U32(0xFFFFF000))
    c = (z - df * df) / (s + df)
    w = _asin_r(z) * s + c
    return F2 * (df + w)


@_jit
def asinf(x):
    hx = _bits(x)
    ix = hx & U32(0x7FFFFFFF)
    if ix >= U32(0x3F800000):  # |x| >= 1
        if ix == U32(0x3F800000):
            return F32(F64(x) * ASIN_PIO2 + X1P_120D)  # +-pi/2 with inexact
        return F0 / (x - x)  # NaN
    if ix < U32(0x3F000000):  # |x| < 0.5
        if ix >= U32(0x00800000) and ix < U32(0x39800000):
            return x
        return x + x * _asin_r(x * x)
    # 1 > |x| >= 0.5
    z = (F1 - fabsf(x)) * F05
    s = np.sqrt(F64(z))
    r = F32(ASIN_PIO2 - F64(2.0) * (s + s * F64(_asin_r(z))))
    return -r if (hx >> U32(31)) != U32(0) else r


# ---------------------------------------------------------------------------
# atanhf (musl src/math/atanhf.c)
# ---------------------------------------------------------------------------


@_jit
def atanhf(x):
    u = _bits(x)
    sign = (u >> U32(31)) != U32(0)
    u = u & U32(0x7FFFFFFF)
    y = _from_bits(u)

    if u < U32(0x3F800000 - (1 << 23)):
        if u >= U32(0x3F800000 - (32 << 23)):
            # |x| < 0.5, up to 1.7ulp error
            y = F05 * log1pf(F2 * y + F2 * y * y / (F1 - y))
    else:
        y = F05 * log1pf(F2 * (y / (F1 - y)))
    return -y if sign else y


# ---------------------------------------------------------------------------
# Activation functions (the formulas pinned for the whole artifact; the C
# emitter writes the identical expressions)
# ---------------------------------------------------------------------------


@_jit
def relu(x):
    return F0 if x < F0 else x


@_jit
def step(x):
    return F0 if x < F0 else F1


@_jit
def elu(x):
    if x < F0:
        return expf(x) - F1
    return x


@_jit
def gaussian(x):
    return expf(-(x * x))


@_jit
def logistic(x):
    e = expf(-x)
    return F1 / (F1 + e)


@_jit
def logistic_tanh_form(x):
    # the alternative algebraic form 0.5*(1+tanh(x/2)); not bit-identical to
    # logistic() everywhere, which is itself a benchmark subject
    return F05 * (F1 + tanhf(x / F2))


@_jit
def gelu(x):
    t = x / SQRT2F
    return F05 * x * (F1 + erff(t))


@_jit
def glu(x, y):
    return x * logistic(y)


@_jit
def softplus(x):
    e = expf(x)
    return logf(F1 + e)


@_jit
def softsign(x):
    t = F1 + fabsf(x)
    return x / t


# unary alias used when GLU appears inside a network (Swish: x*logistic(x))
@_jit
def swish(x):
    return x * logistic(x)


# ---------------------------------------------------------------------------
# Batch drivers (one per unary kernel; sinf/cosf share reduction scratch)
# ---------------------------------------------------------------------------


@_jitfn
def batch_expf(xs, out):
    for i in range(xs.size):
        out[i] = expf(xs[i])


@_jitfn
def batch_expm1f(xs, out):
    for i in range(xs.size):
        out[i] = expm1f(xs[i])


@_jitfn
def batch_logf(xs, out):
    for i in range(xs.size):
        out[i] = logf(xs[i])


@_jitfn
def batch_log1pf(xs, out):
    for i in range(xs.size):
        out[i] = log1pf(xs[i])


@_jitfn
def batch_tanhf(xs, out):
    for i in range(xs.size):
        out[i] = tanhf(xs[i])


@_jitfn
def batch_erff(xs, out):
    for i in range(xs.size):
        out[i] = erff(xs[i])


@_jitfn
def batch_sqrtf(xs, out):
    for i in range(xs.size):
        out[i] = sqrtf(xs[i])


@_jitfn
def batch_fabsf(xs, out):
    for i in range(xs.size):
        out[i] = fabsf(xs[i])


@_jitfn
def batch_sinf(xs, out):
    f = np.empty(20, dtype=np.float64)
    q = np.empty(20, dtype=np.float64)
    fq = np.empty(20, dtype=np.float64)
    iq = np.empty(20, dtype=np.int32)
    for i in range(xs.size):
        out[i] = _sinf_inner(xs[i], f, q, fq, iq)


@_jitfn
def batch_cosf(xs, out):
    f = np.empty(20, dtype=np.float64)
    q = np.empty(20, dtype=np.float64)
    fq = np.empty(20, dtype=np.float64)
    iq = np.empty(20, dtype=np.int32)
    for i in range(xs.size):
        out[i] = _cosf_inner(xs[i], f, q, fq, iq)


@_jitfn
def batch_acosf(xs, out):
    for i in range(xs.size):
        out[i] = acosf(xs[i])


@_jitfn
def batch_asinf(xs, out):
    for i in range(xs.size):
        out[i] = asinf(xs[i])


@_jitfn
def batch_atanhf(xs, out):
    for i in range(xs.size):
        out[i] = atanhf(xs[i])


@_jitfn
def batch_relu(xs, out):
    for i in range(xs.size):
        out[i] = relu(xs[i])


@_jitfn
def batch_step(xs, out):
    for i in range(xs.size):
        out[i] = step(xs[i])


@_jitfn
def batch_elu(xs, out):
    for i in range(xs.size):
        out[i] = elu(xs[i])


@_jitfn
def batch_gaussian(xs, out):
    for i in range(xs.size):
        out[i] = gaussian(xs[i])


@_jitfn
def batch_logistic(xs, out):
    for i in range(xs.size):
        out[i] = logistic(xs[i])


@_jitfn
def batch_logistic_tanh_form(xs, out):
    for i in range(xs.size):
        out[i] = logistic_tanh_form(xs[i])


@_jitfn
def batch_gelu(xs, out):
    for i in range(xs.size):
        out[i] = gelu(xs[i])


@_jitfn
def batch_softplus(xs, out):
    for i in range(xs.size):
        out[i] = softplus(xs[i])


@_jitfn
def batch_softsign(xs, out):
    for i in range(xs.size):
        out[i] = softsign(xs[i])


@_jitfn
def batch_swish(xs, out):
    for i in range(xs.size):
        out[i] = swish(xs[i])


@_jitfn
def batch_glu(xs, ys, out):
    for i in range(xs.size):
        out[i] = glu(xs[i], ys[i])


@_jitfn
def batch_fmaxf(xs, ys, out):
    for i in range(xs.size):
        out[i] = fmaxf(xs[i], ys[i])


# ---------------------------------------------------------------------------
# Network batch evaluator
#
# A network is a (layers x 8) int32 program plus a flat f32 weight buffer.
# Activations are applied column-batch-wise; matvec rows accumulate one f32
# in ascending j, vectorized across the batch dimension (inner, contiguous).
# The C emitter writes the same loops sample-by-sample, which is identical
# because batch lanes are independent.
# ---------------------------------------------------------------------------

OP_DENSE = 0
OP_ACT = 1
OP_CONV1D = 2
OP_AVGPOOL = 3
OP_MAXPOOL = 4
OP_BATCHNORM = 5
OP_LAYERNORM = 6
OP_SOFTMAX = 7
OP_ZEROPAD = 8
OP_SLL = 9

ACT_ELU = 0
ACT_GAUSSIAN = 1
ACT_GELU = 2
ACT_GLU = 3  # unary in-network form: swish
ACT_LOGISTIC = 4
ACT_RELU = 5
ACT_SOFTPLUS = 6
ACT_SOFTSIGN = 7
ACT_STEP = 8
ACT_TANH = 9


@_jit
def _apply_act(kind, x):
    if kind == ACT_RELU:
        return relu(x)
    if kind == ACT_TANH:
        return tanhf(x)
    if kind == ACT_SOFTSIGN:
        return softsign(x)
    if kind == ACT_LOGISTIC:
        return logistic(x)
    if kind == ACT_ELU:
        return elu(x)
    if kind == ACT_GAUSSIAN:
        return gaussian(x)
    if kind == ACT_GELU:
        return gelu(x)
    if kind == ACT_GLU:
        return swish(x)
    if kind == ACT_SOFTPLUS:
        return softplus(x)
    return step(x)  # ACT_STEP


TILE = 16  # batch lanes accumulated in registers per matvec row


@_jit
def _matvec_rows(wbuf, woff, stride, active, bias_off, out_dim, cur, nxt, nb):
    lacc = np.empty(TILE, dtype=np.float32)
    """nxt[i, :] = sum_j w[i, j] * cur[j, :] + bias[i], ascending j per lane."""
    full = (nb // TILE) * TILE
    for i in range(out_dim):
        base = woff + i * stride
        for b0 in range(0, full, TILE):
            for t in range(TILE):
                lacc[t] = F0
            for j in range(active):
                w = wbuf[base + j]
                for t in range(TILE):
                    lacc[t] += w * cur[j, b0 + t]
            bias = wbuf[bias_off + i]
            for t in range(TILE):
                nxt[i, b0 + t] = lacc[t] + bias
        for b in range(full, nb):
            s = F0
            for j in range(active):
                s += wbuf[base + j] * cur[j, b]
            nxt[i, b] = s + wbuf[bias_off + i]


@_jitfn
def net_eval_batch(prog, wbuf, x, buf_a, buf_b, buf_t, out):
    """Run the layer program over a batch.

    x: (in_dim, B) f32; buf_a/buf_b/buf_t: (maxdim, B) scratch;
    out: (out_dim, B) filled on return.
    """
    nb = x.shape[1]
    cur_dim = x.shape[0]
    lacc = np.empty(TILE, dtype=np.float32)
    for d in range(cur_dim):
        for b in range(nb):
            buf_a[d, b] = x[d, b]
    cur = buf_a
    nxt = buf_b

    for li in range(prog.shape[0]):
        op = prog[li, 0]
        if op == OP_DENSE:
            out_dim = prog[li, 2]
            woff = prog[li, 3]
            boff = prog[li, 4]
            active = prog[li, 5]
            in_dim = prog[li, 1]
            _matvec_rows(wbuf, woff, in_dim, active, boff, out_dim, cur, nxt, nb)
            cur_dim = out_dim
            cur, nxt = nxt, cur
        elif op == OP_ACT:
            kind = prog[li, 2]
            for d in range(cur_dim):
                for b in range(nb):
                    cur[d, b] = _apply_act(kind, cur[d, b])
        elif op == OP_CONV1D:
            out_len = prog[li, 2]
            koff = prog[li, 3]
            kw = prog[li, 4]
            boff = prog[li, 5]
            stride = prog[li, 6]
            for i in range(out_len):
                for b in range(nb):
                    buf_t[0, b] = F0
                for j in range(kw):
                    w = wbuf[koff + j]
                    src = i * stride + j
                    for b in range(nb):
                        buf_t[0, b] += w * cur[src, b]
                bias = wbuf[boff]
                for b in range(nb):
                    nxt[i, b] = buf_t[0, b] + bias
            cur_dim = out_len
            cur, nxt = nxt, cur
        elif op == OP_AVGPOOL:
            out_len = prog[li, 2]
            window = prog[li, 3]
            stride = prog[li, 4]
            wf = F32(window)
            for i in range(out_len):
                for b in range(nb):
                    buf_t[0, b] = F0
                for j in range(window):
                    src = i * stride + j
                    for b in range(nb):
                        buf_t[0, b] += cur[src, b]
                for b in range(nb):
                    nxt[i, b] = buf_t[0, b] / wf
            cur_dim = out_len
            cur, nxt = nxt, cur
        elif op == OP_MAXPOOL:
            out_len = prog[li, 2]
            window = prog[li, 3]
            stride = prog[li, 4]
            for i in range(out_len):
                for b in range(nb):
                    nxt[i, b] = cur[i * stride, b]
                for j in range(1, window):
                    src = i * stride + j
                    for b in range(nb):
                        v = cur[src, b]
                        if v > nxt[i, b]:
                            nxt[i, b] = v
            cur_dim = out_len
            cur, nxt = nxt, cur
        elif op == OP_BATCHNORM:
            goff = prog[li, 2]
            boff = prog[li, 3]
            moff = prog[li, 4]
            voff = prog[li, 5]
            eoff = prog[li, 6]
            eps = wbuf[eoff]
            for d in range(cur_dim):
                g = wbuf[goff + d]
                be = wbuf[boff + d]
                mean = wbuf[moff + d]
                var = wbuf[voff + d]
                s = sqrtf(var + eps)
                for b in range(nb):
                    t = cur[d, b] - mean
                    q = t / s
                    cur[d, b] = g * q + be
        elif op == OP_LAYERNORM:
            goff = prog[li, 2]
            boff = prog[li, 3]
            eoff = prog[li, 4]
            eps = wbuf[eoff]
            df = F32(cur_dim)
            for b in range(nb):
                acc = F0
                for d in range(cur_dim):
                    acc += cur[d, b]
                mu = acc / df
                acc2 = F0
                for d in range(cur_dim):
                    t = cur[d, b] - mu
                    acc2 += t * t
                var = acc2 / df
                s = sqrtf(var + eps)
                for d in range(cur_dim):
                    t = cur[d, b] - mu
                    q = t / s
                    cur[d, b] = wbuf[goff + d] * q + wbuf[boff + d]
        elif op == OP_SOFTMAX:
            for b in range(nb):
                acc = F0
                for d in range(cur_dim):
                    e = expf(cur[d, b])
                    nxt[d, b] = e
                    acc += e
                for d in range(cur_dim):
                    cur[d, b] = nxt[d, b] / acc
        elif op == OP_ZEROPAD:
            out_dim = prog[li, 2]
            for d in range(cur_dim):
                for b in range(nb):
                    nxt[d, b] = cur[d, b]
            for d in range(cur_dim, out_dim):
                for b in range(nb):
                    nxt[d, b] = F0
            cur_dim = out_dim
            cur, nxt = nxt, cur
        elif op == OP_SLL:
            dim = prog[li, 1]
            woff = prog[li, 2]
            boff = prog[li, 3]
            voff = prog[li, 4]
            active = prog[li, 5]
            # t = relu(W x + b) into buf_t rows
            _matvec_rows(wbuf, woff, dim, active, boff, dim, cur, buf_t, nb)
            for i in range(dim):
                for b in range(nb):
                    buf_t[i, b] = relu(buf_t[i, b])
            # out = x - V t  (V matvec accumulates ascending j, then residual)
            full = (nb // TILE) * TILE
            for i in range(dim):
                base = voff + i * dim
                for b0 in range(0, full, TILE):
                    for t in range(TILE):
                        lacc[t] = F0
                    for j in range(dim):
                        v = wbuf[base + j]
                        for t in range(TILE):
                            lacc[t] += v * buf_t[j, b0 + t]
                    for t in range(TILE):
                        nxt[i, b0 + t] = cur[i, b0 + t] - lacc[t]
                for b in range(full, nb):
                    s = F0
                    for j in range(dim):
                        s += wbuf[base + j] * buf_t[j, b]
                    nxt[i, b] = cur[i, b] - s
            cur, nxt = nxt, cur

    for d in range(cur_dim):
        for b in range(nb):
            out[d, b] = cur[d, b]
