/* derived from musl src/math/tanhf.c */
float tanhf(float x)
{
	float t, ax;
	nnv_u32 ix;
	int sign;

	ix = nnv_f2u(x);
	sign = (int)(ix >> 31);
	ix &= 0x7fffffff;
	ax = nnv_u2f(ix);

	if (ix > 0x3f0c9f54) {
		/* |x| > log(3)/2 ~= 0.5493 or nan */
		if (ix > 0x41200000) {
			/* |x| > 10 */
			t = 1 + 0 / ax;
		} else {
			t = expm1f(2 * ax);
			t = 1 - 2 / (t + 2);
		}
	} else if (ix > 0x3e82c578) {
		/* |x| > log(5/3)/2 ~= 0.2554 */
		t = expm1f(2 * ax);
		t = t / (t + 2);
	} else if (ix >= 0x00800000) {
		/* |x| >= 0x1p-126 */
		t = expm1f(-2 * ax);
		t = -t / (t + 2);
	} else {
		/* |x| is subnormal */
		t = ax;
	}
	return sign ? -t : t;
}
