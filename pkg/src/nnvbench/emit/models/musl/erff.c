/* derived from musl src/math/erff.c (FreeBSD s_erff.c) */
static const float nnv_erx = 8.4506291151e-01f,  /* 0x3f58560b */
	nnv_efx8 = 1.0270333290e+00f, /* 0x3f8375d4 */
	nnv_pp0 = 1.2837916613e-01f,
	nnv_pp1 = -3.2504209876e-01f,
	nnv_pp2 = -2.8481749818e-02f,
	nnv_pp3 = -5.7702702470e-03f,
	nnv_pp4 = -2.3763017452e-05f,
	nnv_qq1 = 3.9791721106e-01f,
	nnv_qq2 = 6.5022252500e-02f,
	nnv_qq3 = 5.0813062117e-03f,
	nnv_qq4 = 1.3249473704e-04f,
	nnv_qq5 = -3.9602282413e-06f,
	nnv_pa0 = -2.3621185683e-03f,
	nnv_pa1 = 4.1485610604e-01f,
	nnv_pa2 = -3.7220788002e-01f,
	nnv_pa3 = 3.1834661961e-01f,
	nnv_pa4 = -1.1089469492e-01f,
	nnv_pa5 = 3.5478305072e-02f,
	nnv_pa6 = -2.1663755178e-03f,
	nnv_qa1 = 1.0642088205e-01f,
	nnv_qa2 = 5.4039794207e-01f,
	nnv_qa3 = 7.1828655899e-02f,
	nnv_qa4 = 1.2617121637e-01f,
	nnv_qa5 = 1.3637083583e-02f,
	nnv_qa6 = 1.1984500103e-02f,
	nnv_ra0 = -9.8649440333e-03f,
	nnv_ra1 = -6.9385856390e-01f,
	nnv_ra2 = -1.0558626175e+01f,
	nnv_ra3 = -6.2375331879e+01f,
	nnv_ra4 = -1.6239666748e+02f,
	nnv_ra5 = -1.8460508728e+02f,
	nnv_ra6 = -8.1287437439e+01f,
	nnv_ra7 = -9.8143291473e+00f,
	nnv_sa1 = 1.9651271820e+01f,
	nnv_sa2 = 1.3765776062e+02f,
	nnv_sa3 = 4.3456588745e+02f,
	nnv_sa4 = 6.4538726807e+02f,
	nnv_sa5 = 4.2900814819e+02f,
	nnv_sa6 = 1.0863500214e+02f,
	nnv_sa7 = 6.5702495575e+00f,
	nnv_sa8 = -6.0424413532e-02f,
	nnv_rb0 = -9.8649431020e-03f,
	nnv_rb1 = -7.9928326607e-01f,
	nnv_rb2 = -1.7757955551e+01f,
	nnv_rb3 = -1.6063638306e+02f,
	nnv_rb4 = -6.3756646729e+02f,
	nnv_rb5 = -1.0250950928e+03f,
	nnv_rb6 = -4.8351919556e+02f,
	nnv_sb1 = 3.0338060379e+01f,
	nnv_sb2 = 3.2579251099e+02f,
	nnv_sb3 = 1.5367296143e+03f,
	nnv_sb4 = 3.1998581543e+03f,
	nnv_sb5 = 2.5530502930e+03f,
	nnv_sb6 = 4.7452853394e+02f,
	nnv_sb7 = -2.2440952301e+01f;

static float nnv_erfc1(float x)
{
	float s, p, q;

	s = fabsf(x) - 1;
	p = nnv_pa0 + s * (nnv_pa1 + s * (nnv_pa2 + s * (nnv_pa3 + s * (nnv_pa4 + s * (nnv_pa5 + s * nnv_pa6)))));
	q = 1 + s * (nnv_qa1 + s * (nnv_qa2 + s * (nnv_qa3 + s * (nnv_qa4 + s * (nnv_qa5 + s * nnv_qa6)))));
	return 1 - nnv_erx - p / q;
}

static float nnv_erfc2(nnv_u32 ix, float x)
{
	float s, r, big_s, z;

	if (ix < 0x3fa00000)  /* |x| < 1.25 */
		return nnv_erfc1(x);

	x = fabsf(x);
	s = 1 / (x * x);
	if (ix < 0x4036db6d) {  /* |x| < 1/0.35 */
		r = nnv_ra0 + s * (nnv_ra1 + s * (nnv_ra2 + s * (nnv_ra3 + s * (nnv_ra4 + s * (nnv_ra5 + s * (nnv_ra6 + s * nnv_ra7))))));
		big_s = 1.0f + s * (nnv_sa1 + s * (nnv_sa2 + s * (nnv_sa3 + s * (nnv_sa4 + s * (nnv_sa5 + s * (nnv_sa6 + s * (nnv_sa7 + s * nnv_sa8)))))));
	} else {  /* |x| >= 1/0.35 */
		r = nnv_rb0 + s * (nnv_rb1 + s * (nnv_rb2 + s * (nnv_rb3 + s * (nnv_rb4 + s * (nnv_rb5 + s * nnv_rb6)))));
		big_s = 1.0f + s * (nnv_sb1 + s * (nnv_sb2 + s * (nnv_sb3 + s * (nnv_sb4 + s * (nnv_sb5 + s * (nnv_sb6 + s * nnv_sb7))))));
	}
	ix = nnv_f2u(x);
	z = nnv_u2f(ix & 0xffffe000);

	return expf(-z * z - 0.5625f) * expf((z - x) * (z + x) + r / big_s) / x;
}

float erff(float x)
{
	float r, s, z, y;
	nnv_u32 ix;
	int sign;

	ix = nnv_f2u(x);
	sign = (int)(ix >> 31);
	ix &= 0x7fffffff;
	if (ix >= 0x7f800000) {
		/* erf(nan)=nan, erf(+-inf)=+-1 */
		return 1 - 2 * (float)sign + 1 / x;
	}
	if (ix < 0x3f580000) {  /* |x| < 0.84375 */
		if (ix < 0x31800000) {  /* |x| < 2**-28 */
			/* avoid underflow */
			return 0.125f * (8 * x + nnv_efx8 * x);
		}
		z = x * x;
		r = nnv_pp0 + z * (nnv_pp1 + z * (nnv_pp2 + z * (nnv_pp3 + z * nnv_pp4)));
		s = 1 + z * (nnv_qq1 + z * (nnv_qq2 + z * (nnv_qq3 + z * (nnv_qq4 + z * nnv_qq5))));
		y = r / s;
		return x + x * y;
	}
	if (ix < 0x40c00000)  /* |x| < 6 */
		y = 1 - nnv_erfc2(ix, x);
	else
		y = 1 - 0x1p-120f;
	return sign ? -y : y;
}
