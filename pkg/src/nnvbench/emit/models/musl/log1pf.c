/* derived from musl src/math/log1pf.c (FreeBSD s_log1pf.c) */
float log1pf(float x)
{
	static const float ln2_hi = 6.9313812256e-01f; /* 0x3f317180 */
	static const float ln2_lo = 9.0580006145e-06f; /* 0x3717f7d1 */
	static const float lg1 = 0.66666662693f; /* 0xaaaaaa.0p-24 */
	static const float lg2 = 0.40000972152f; /* 0xccce13.0p-25 */
	static const float lg3 = 0.28498786688f; /* 0x91e9ee.0p-25 */
	static const float lg4 = 0.24279078841f; /* 0xf89e26.0p-26 */
	float hfsq, f, c, s, z, r, w, t1, t2, dk, uf;
	nnv_u32 ix, iu, ui;
	int k;

	ix = ui = nnv_f2u(x);
	f = 0;
	c = 0;
	k = 1;
	if (ix < 0x3ed413d0 || ix >> 31) {  /* 1+x < sqrt(2)+ */
		if (ix >= 0xbf800000) {  /* x <= -1.0 */
			if (x == -1)
				return x / 0.0f; /* log1p(-1)=-inf */
			return (x - x) / 0.0f; /* log1p(x<-1)=NaN */
		}
		if ((ix & 0x7fffffff) < 0x33800000)  /* |x| < 2**-24 */
			return x;
		if (ix <= 0xbe95f619) {  /* sqrt(2)/2- <= 1+x < sqrt(2)+ */
			k = 0;
			c = 0;
			f = x;
		}
	} else if (ix >= 0x7f800000)
		return x;
	if (k) {
		uf = 1 + x;
		ui = nnv_f2u(uf);
		iu = ui + (0x3f800000 - 0x3f3504f3);
		k = (int)(iu >> 23) - 0x7f;
		/* correction term ~ log(1+x)-log(u), avoid underflow in c/u */
		if (k < 25) {
			c = k >= 2 ? 1 - (nnv_u2f(ui) - x) : x - (nnv_u2f(ui) - 1);
			c /= nnv_u2f(ui);
		} else
			c = 0;
		/* reduce u into [sqrt(2)/2, sqrt(2)] */
		iu = (iu & 0x007fffff) + 0x3f3504f3;
		ui = iu;
		f = nnv_u2f(ui) - 1;
	}
	s = f / (2.0f + f);
	z = s * s;
	w = z * z;
	t1 = w * (lg2 + w * lg4);
	t2 = z * (lg1 + w * lg3);
	r = t2 + t1;
	hfsq = 0.5f * f * f;
	dk = (float)k;
	return s * (hfsq + r) + (dk * ln2_lo + c) - hfsq + f + dk * ln2_hi;
}
