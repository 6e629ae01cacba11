/* derived from musl src/math/acosf.c (FreeBSD e_acosf.c) */
static const float nnv_acos_pio2_hi = 1.5707962513e+00f; /* 0x3fc90fda */
static const float nnv_acos_pio2_lo = 7.5497894159e-08f; /* 0x33a22168 */
static const float nnv_asin_ps0 = 1.6666586697e-01f;
static const float nnv_asin_ps1 = -4.2743422091e-02f;
static const float nnv_asin_ps2 = -8.6563630030e-03f;
static const float nnv_asin_qs1 = -7.0662963390e-01f;

static float nnv_asin_r(float z)
{
	float p, q;
	p = z * (nnv_asin_ps0 + z * (nnv_asin_ps1 + z * nnv_asin_ps2));
	q = 1.0f + z * nnv_asin_qs1;
	return p / q;
}

float acosf(float x)
{
	float z, w, s, c, df;
	nnv_u32 hx, ix;

	hx = nnv_f2u(x);
	ix = hx & 0x7fffffff;
	/* |x| >= 1 or nan */
	if (ix >= 0x3f800000) {
		if (ix == 0x3f800000) {
			if (hx >> 31)
				return 2 * nnv_acos_pio2_hi + 0x1p-120f;
			return 0;
		}
		return 0 / (x - x);
	}
	/* |x| < 0.5 */
	if (ix < 0x3f000000) {
		if (ix <= 0x32800000)  /* |x| < 2**-26 */
			return nnv_acos_pio2_hi + 0x1p-120f;
		return nnv_acos_pio2_hi - (x - (nnv_acos_pio2_lo - x * nnv_asin_r(x * x)));
	}
	/* x < -0.5 */
	if (hx >> 31) {
		z = (1 + x) * 0.5f;
		s = sqrtf(z);
		w = nnv_asin_r(z) * s - nnv_acos_pio2_lo;
		return 2 * (nnv_acos_pio2_hi - (s + w));
	}
	/* x > 0.5 */
	z = (1 - x) * 0.5f;
	s = sqrtf(z);
	hx = nnv_f2u(s);
	df = nnv_u2f(hx & 0xfffff000);
	c = (z - df * df) / (s + df);
	w = nnv_asin_r(z) * s + c;
	return 2 * (df + w);
}
