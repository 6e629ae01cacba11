/* derived from musl src/math/atanhf.c */
/* atanh(x) = log((1+x)/(1-x))/2 = log1p(2x/(1-x))/2 ~= x + x^3/3 + o(x^5) */
float atanhf(float x)
{
	float y;
	nnv_u32 u;
	int sign;

	u = nnv_f2u(x);
	sign = (int)(u >> 31);
	u &= 0x7fffffff;
	y = nnv_u2f(u);

	if (u < 0x3f800000 - (1 << 23)) {
		if (u < 0x3f800000 - (32 << 23)) {
			/* |x| < 2**-32, y unchanged (underflow region) */
		} else {
			/* |x| < 0.5, up to 1.7ulp error */
			y = 0.5f * log1pf(2 * y + 2 * y * y / (1 - y));
		}
	} else {
		/* avoid overflow */
		y = 0.5f * log1pf(2 * (y / (1 - y)));
	}
	return sign ? -y : y;
}
