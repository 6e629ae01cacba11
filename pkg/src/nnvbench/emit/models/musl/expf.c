/* derived from musl src/math/expf.c (FreeBSD e_expf.c) */
static const float nnv_expf_half[2] = {0.5f, -0.5f};

float expf(float x)
{
	float hi, lo, c, xx, y;
	int k, sign;
	nnv_u32 hx;

	hx = nnv_f2u(x);
	sign = (int)(hx >> 31);
	hx &= 0x7fffffff;

	/* special cases */
	if (hx >= 0x42aeac50) {  /* if |x| >= -87.33655f or NaN */
		if (hx > 0x7f800000)  /* NaN */
			return x;
		if (hx >= 0x42b17218 && !sign) {  /* x >= 88.722839f */
			/* overflow */
			x *= 0x1p127f;
			return x;
		}
		if (sign) {
			/* underflow */
			if (hx >= 0x42cff1b5)  /* x <= -103.972084f */
				return 0;
		}
	}

	/* argument reduction */
	if (hx > 0x3eb17218) {  /* if |x| > 0.5 ln2 */
		if (hx > 0x3f851592)  /* if |x| > 1.5 ln2 */
			k = (int)(1.4426950216e+00f * x + nnv_expf_half[sign]);
		else
			k = 1 - sign - sign;
		hi = x - (float)k * 6.9314575195e-01f;  /* k*ln2hi is exact here */
		lo = (float)k * 1.4286067653e-06f;
		x = hi - lo;
	} else if (hx > 0x39000000) {  /* |x| > 2**-14 */
		k = 0;
		hi = x;
		lo = 0;
	} else {
		return 1 + x;
	}

	/* x is now in primary range */
	xx = x * x;
	c = x - xx * (1.6666625440e-1f + xx * -2.7667332906e-3f);
	y = 1 + (x * c / (2 - c) - lo + hi);
	if (k == 0)
		return y;
	return scalbnf(y, k);
}
