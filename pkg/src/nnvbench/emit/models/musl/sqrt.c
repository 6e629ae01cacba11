/* derived from musl src/math/sqrt.c (FreeBSD e_sqrt.c, bit-by-bit method);
 * double precision, used by asinf */
double sqrt(double x)
{
	double z;
	nnv_i32 sign = (nnv_i32)0x80000000;
	nnv_i32 ix0, s0, q, m, t, i;
	nnv_u32 r, t1, s1, ix1, q1;
	nnv_u64 bits;

	bits = nnv_d2u(x);
	ix0 = (nnv_i32)(bits >> 32);
	ix1 = (nnv_u32)bits;

	/* take care of Inf and NaN */
	if ((ix0 & 0x7ff00000) == 0x7ff00000)
		return x * x + x;

	/* take care of zero */
	if (ix0 <= 0) {
		if (((ix0 & ~sign) | (nnv_i32)ix1) == 0)
			return x;  /* sqrt(+-0) = +-0 */
		if (ix0 < 0)
			return (x - x) / (x - x);  /* sqrt(-ve) = sNaN */
	}
	/* normalize x */
	m = ix0 >> 20;
	if (m == 0) {  /* subnormal x */
		while (ix0 == 0) {
			m -= 21;
			ix0 |= (nnv_i32)(ix1 >> 11);
			ix1 <<= 21;
		}
		for (i = 0; (ix0 & 0x00100000) == 0; i++)
			ix0 <<= 1;
		m -= i - 1;
		ix0 |= (nnv_i32)(ix1 >> (32 - i));
		ix1 <<= i;
	}
	m -= 1023;  /* unbias exponent */
	ix0 = (ix0 & 0x000fffff) | 0x00100000;
	if (m & 1) {  /* odd m, double x to make it even */
		ix0 += ix0 + (nnv_i32)((ix1 & (nnv_u32)sign) >> 31);
		ix1 += ix1;
	}
	m >>= 1;  /* m = [m/2] */

	/* generate sqrt(x) bit by bit */
	ix0 += ix0 + (nnv_i32)((ix1 & (nnv_u32)sign) >> 31);
	ix1 += ix1;
	q = s0 = 0;
	q1 = s1 = 0;  /* [q,q1] = sqrt(x) */
	r = 0x00200000;  /* r = moving bit from right to left */

	while (r != 0) {
		t = s0 + (nnv_i32)r;
		if (t <= ix0) {
			s0 = t + (nnv_i32)r;
			ix0 -= t;
			q += (nnv_i32)r;
		}
		ix0 += ix0 + (nnv_i32)((ix1 & (nnv_u32)sign) >> 31);
		ix1 += ix1;
		r >>= 1;
	}

	r = (nnv_u32)sign;
	while (r != 0) {
		t1 = s1 + r;
		t = s0;
		if (t < ix0 || (t == ix0 && t1 <= ix1)) {
			s1 = t1 + r;
			if ((t1 & (nnv_u32)sign) == (nnv_u32)sign && (s1 & (nnv_u32)sign) == 0)
				s0 += 1;
			ix0 -= t;
			if (ix1 < t1)
				ix0 -= 1;
			ix1 -= t1;
			q1 += r;
		}
		ix0 += ix0 + (nnv_i32)((ix1 & (nnv_u32)sign) >> 31);
		ix1 += ix1;
		r >>= 1;
	}

	/* use floating add to find out rounding direction */
	if (((nnv_u32)ix0 | ix1) != 0) {
		z = 1.0 - 1.0e-300;  /* raise inexact flag */
		if (z >= 1.0) {
			z = 1.0 + 1.0e-300;
			if (q1 == 0xffffffffu) {
				q1 = 0;
				q += 1;
			} else if (z > 1.0) {
				if (q1 == 0xfffffffeu)
					q += 1;
				q1 += 2;
			} else
				q1 += q1 & 1;
		}
	}
	ix0 = (q >> 1) + 0x3fe00000;
	ix1 = q1 >> 1;
	if (q & 1)
		ix1 |= (nnv_u32)sign;
	ix0 += m << 20;
	return nnv_u2d(((nnv_u64)(nnv_u32)ix0 << 32) | ix1);
}
