/* derived from musl src/math/sqrtf.c (FreeBSD e_sqrtf.c, bit-by-bit method);
 * correctly rounded in round-to-nearest */
float sqrtf(float x)
{
	float z;
	nnv_i32 sign = (int)0x80000000;
	nnv_i32 ix, s, q, m, t, i;
	nnv_u32 r;

	ix = (nnv_i32)nnv_f2u(x);

	/* take care of Inf and NaN */
	if ((ix & 0x7f800000) == 0x7f800000)
		return x * x + x;  /* sqrt(NaN)=NaN, sqrt(+inf)=+inf, sqrt(-inf)=sNaN */

	/* take care of zero */
	if (ix <= 0) {
		if ((ix & ~sign) == 0)
			return x;  /* sqrt(+-0) = +-0 */
		if (ix < 0)
			return (x - x) / (x - x);  /* sqrt(-ve) = sNaN */
	}
	/* normalize x */
	m = ix >> 23;
	if (m == 0) {  /* subnormal x */
		for (i = 0; (ix & 0x00800000) == 0; i++)
			ix <<= 1;
		m -= i - 1;
	}
	m -= 127;  /* unbias exponent */
	ix = (ix & 0x007fffff) | 0x00800000;
	if (m & 1)  /* odd m, double x to make it even */
		ix += ix;
	m >>= 1;  /* m = [m/2] */

	/* generate sqrt(x) bit by bit */
	ix += ix;
	q = s = 0;       /* q = sqrt(x) */
	r = 0x01000000;  /* r = moving bit from right to left */

	while (r != 0) {
		t = s + (nnv_i32)r;
		if (t <= ix) {
			s = t + (nnv_i32)r;
			ix -= t;
			q += (nnv_i32)r;
		}
		ix += ix;
		r >>= 1;
	}

	/* use floating add to find out rounding direction */
	if (ix != 0) {
		z = 1.0f - 1.0e-30f;  /* raise inexact flag */
		if (z >= 1.0f) {
			z = 1.0f + 1.0e-30f;
			if (z > 1.0f)
				q += 2;
			else
				q += q & 1;
		}
	}
	ix = (q >> 1) + 0x3f000000;
	ix += m << 23;
	return nnv_u2f((nnv_u32)ix);
}
