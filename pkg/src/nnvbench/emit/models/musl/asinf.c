/* derived from musl src/math/asinf.c (FreeBSD e_asinf.c) */
static const double nnv_asin_pio2 = 1.570796326794896558e+00;
static const float nnv_asinf_ps0 = 1.6666586697e-01f;
static const float nnv_asinf_ps1 = -4.2743422091e-02f;
static const float nnv_asinf_ps2 = -8.6563630030e-03f;
static const float nnv_asinf_qs1 = -7.0662963390e-01f;

static float nnv_asinf_r(float z)
{
	float p, q;
	p = z * (nnv_asinf_ps0 + z * (nnv_asinf_ps1 + z * nnv_asinf_ps2));
	q = 1.0f + z * nnv_asinf_qs1;
	return p / q;
}

float asinf(float x)
{
	double s;
	float z;
	nnv_u32 hx, ix;

	hx = nnv_f2u(x);
	ix = hx & 0x7fffffff;
	if (ix >= 0x3f800000) {  /* |x| >= 1 */
		if (ix == 0x3f800000)  /* |x| == 1 */
			return (float)((double)x * nnv_asin_pio2 + 0x1p-120);  /* asin(+-1) = +-pi/2 with inexact */
		return 0 / (x - x);  /* asin(|x|>1) is NaN */
	}
	if (ix < 0x3f000000) {  /* |x| < 0.5 */
		/* if 0x1p-126 <= |x| < 0x1p-12, avoid raising underflow */
		if (ix < 0x39800000 && ix >= 0x00800000)
			return x;
		return x + x * nnv_asinf_r(x * x);
	}
	/* 1 > |x| >= 0.5 */
	z = (1 - fabsf(x)) * 0.5f;
	s = sqrt(z);
	x = (float)(nnv_asin_pio2 - 2 * (s + s * (double)nnv_asinf_r(z)));
	return hx >> 31 ? -x : x;
}
