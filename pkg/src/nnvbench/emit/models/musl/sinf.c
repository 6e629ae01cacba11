/* derived from musl src/math/sinf.c (FreeBSD s_sinf.c) */
float sinf(float x)
{
	/* Small multiples of pi/2 rounded to double precision. */
	static const double s1pio2 = 1 * 1.5707963267948966;
	static const double s2pio2 = 2 * 1.5707963267948966;
	static const double s3pio2 = 3 * 1.5707963267948966;
	static const double s4pio2 = 4 * 1.5707963267948966;
	double x64, y;
	nnv_u32 ix;
	int n, sign;

	x64 = (double)x;
	ix = nnv_f2u(x);
	sign = (int)(ix >> 31);
	ix &= 0x7fffffff;

	if (ix <= 0x3f490fda) {  /* |x| ~<= pi/4 */
		if (ix < 0x39800000)  /* |x| < 2**-12 */
			return x;
		return nnv_k_sinf(x64);
	}
	if (ix <= 0x407b53d1) {  /* |x| ~<= 5*pi/4 */
		if (ix <= 0x4016cbe3) {  /* |x| ~<= 3pi/4 */
			if (sign)
				return -nnv_k_cosf(x64 + s1pio2);
			return nnv_k_cosf(x64 - s1pio2);
		}
		return nnv_k_sinf(sign ? -(x64 + s2pio2) : -(x64 - s2pio2));
	}
	if (ix <= 0x40e231d5) {  /* |x| ~<= 9*pi/4 */
		if (ix <= 0x40afeddf) {  /* |x| ~<= 7*pi/4 */
			if (sign)
				return nnv_k_cosf(x64 + s3pio2);
			return -nnv_k_cosf(x64 - s3pio2);
		}
		return nnv_k_sinf(sign ? x64 + s4pio2 : x64 - s4pio2);
	}

	/* sin(Inf or NaN) is NaN */
	if (ix >= 0x7f800000)
		return x - x;

	/* general argument reduction needed */
	n = nnv_rem_pio2f(x, &y);
	switch (n & 3) {
	case 0:
		return nnv_k_sinf(y);
	case 1:
		return nnv_k_cosf(y);
	case 2:
		return nnv_k_sinf(-y);
	default:
		return -nnv_k_cosf(y);
	}
}
