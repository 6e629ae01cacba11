/* derived from musl src/math/logf.c (FreeBSD e_logf.c) */
float logf(float x)
{
	static const float ln2_hi = 6.9313812256e-01f; /* 0x3f317180 */
	static const float ln2_lo = 9.0580006145e-06f; /* 0x3717f7d1 */
	static const float lg1 = 0.66666662693f; /* 0xaaaaaa.0p-24 */
	static const float lg2 = 0.40000972152f; /* 0xccce13.0p-25 */
	static const float lg3 = 0.28498786688f; /* 0x91e9ee.0p-25 */
	static const float lg4 = 0.24279078841f; /* 0xf89e26.0p-26 */
	float f, s, z, r, w, t1, t2, hfsq, dk;
	nnv_u32 ix;
	int k;

	ix = nnv_f2u(x);
	k = 0;
	if (ix < 0x00800000 || ix >> 31) {  /* x < 2**-126 */
		if ((ix & 0x7fffffff) == 0)
			return -1 / (x * x);  /* log(+-0)=-inf */
		if (ix >> 31)
			return (x - x) / 0.0f;  /* log(-#) = NaN */
		/* subnormal number, scale up x */
		k -= 25;
		x *= 0x1p25f;
		ix = nnv_f2u(x);
	} else if (ix >= 0x7f800000) {
		return x;
	} else if (ix == 0x3f800000)
		return 0;

	/* reduce x into [sqrt(2)/2, sqrt(2)] */
	ix += 0x3f800000 - 0x3f3504f3;
	k += (int)(ix >> 23) - 0x7f;
	ix = (ix & 0x007fffff) + 0x3f3504f3;
	x = nnv_u2f(ix);

	f = x - 1.0f;
	s = f / (2.0f + f);
	z = s * s;
	w = z * z;
	t1 = w * (lg2 + w * lg4);
	t2 = z * (lg1 + w * lg3);
	r = t2 + t1;
	hfsq = 0.5f * f * f;
	dk = (float)k;
	return s * (hfsq + r) + dk * ln2_lo - hfsq + f + dk * ln2_hi;
}
