/* derived from musl src/math/__sindf.c and __cosdf.c (FreeBSD k_sinf/k_cosf) */
static float nnv_k_sinf(double x)
{
	/* |sin(x)/x - s(x)| < 2**-37.5 (~[-4.89e-12, 4.824e-12]). */
	static const double s1 = -0.166666666416265235595;
	static const double s2 = 0.0083333293858894631756;
	static const double s3 = -0.000198393348360966317347;
	static const double s4 = 0.0000027183114939898219064;
	double r, s, w, z;

	z = x * x;
	w = z * z;
	r = s3 + z * s4;
	s = z * x;
	return (float)((x + s * (s1 + z * s2)) + s * w * r);
}

static float nnv_k_cosf(double x)
{
	/* |cos(x) - c(x)| < 2**-34.1 (~[-5.37e-11, 5.295e-11]). */
	static const double c0 = -0.499999997251031003120;
	static const double c1 = 0.0416666233237390631894;
	static const double c2 = -0.00138867637746099294692;
	static const double c3 = 0.0000243904487962774090654;
	double r, w, z;

	z = x * x;
	w = z * z;
	r = c2 + z * c3;
	return (float)(((1.0 + z * c0) + w * c1) + (w * z) * r);
}
