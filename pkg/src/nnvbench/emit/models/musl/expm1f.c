/* derived from musl src/math/expm1f.c (FreeBSD s_expm1f.c) */
float expm1f(float x)
{
	static const float ln2_hi = 6.9313812256e-01f; /* 0x3f317180 */
	static const float ln2_lo = 9.0580006145e-06f; /* 0x3717f7d1 */
	static const float invln2 = 1.4426950216e+00f; /* 0x3fb8aa3b */
	static const float q1 = -3.3333212137e-2f;
	static const float q2 = 1.5807170421e-3f;
	float y, hi, lo, c, t, e, hxs, hfx, r1, twopk, uf;
	nnv_u32 hx;
	int k, sign;

	hx = nnv_f2u(x);
	sign = (int)(hx >> 31);
	hx &= 0x7fffffff;

	/* filter out huge and non-finite argument */
	if (hx >= 0x4195b844) {  /* if |x|>=27*ln2 */
		if (hx > 0x7f800000)  /* NaN */
			return x;
		if (sign)
			return -1;
		if (hx > 0x42b17217) {  /* x > log(FLT_MAX) */
			x *= 0x1p127f;
			return x;
		}
	}

	c = 0;
	/* argument reduction */
	if (hx > 0x3eb17218) {           /* if  |x| > 0.5 ln2 */
		if (hx < 0x3F851592) {   /* and |x| < 1.5 ln2 */
			if (!sign) {
				hi = x - ln2_hi;
				lo = ln2_lo;
				k = 1;
			} else {
				hi = x + ln2_hi;
				lo = -ln2_lo;
				k = -1;
			}
		} else {
			k = (int)(invln2 * x + (sign ? -0.5f : 0.5f));
			t = (float)k;
			hi = x - t * ln2_hi;  /* t*ln2_hi is exact here */
			lo = t * ln2_lo;
		}
		x = hi - lo;
		c = (hi - x) - lo;
	} else if (hx < 0x33000000) {  /* when |x|<2**-25, return x */
		return x;
	} else
		k = 0;

	/* x is now in primary range */
	hfx = 0.5f * x;
	hxs = x * hfx;
	r1 = 1.0f + hxs * (q1 + hxs * q2);
	t = 3.0f - r1 * hfx;
	e = hxs * ((r1 - t) / (6.0f - x * t));
	if (k == 0)  /* c is 0 */
		return x - (x * e - hxs);
	e = x * (e - c) - c;
	e -= hxs;
	if (k == -1)
		return 0.5f * (x - e) - 0.5f;
	if (k == 1) {
		if (x < -0.25f)
			return -2.0f * (e - (x + 0.5f));
		return 1.0f + 2.0f * (x - e);
	}
	twopk = nnv_u2f((nnv_u32)(0x7f + k) << 23);  /* 2^k */
	if (k < 0 || k > 56) {  /* suffice to return exp(x)-1 */
		y = x - e + 1.0f;
		if (k == 128)
			y = y * 2.0f * 0x1p127f;
		else
			y = y * twopk;
		return y - 1.0f;
	}
	uf = nnv_u2f((nnv_u32)(0x7f - k) << 23);  /* 2^-k */
	if (k < 23)
		return (x - e + (1.0f - uf)) * twopk;
	return (x - (e + uf) + 1.0f) * twopk;
}
