/* derived from musl src/math/__rem_pio2_large.c and __rem_pio2f.c
 * (FreeBSD k_rem_pio2.c / e_rem_pio2f.c), specialized to single precision */

static const int nnv_ipio2[66] = {
	0xA2F983, 0x6E4E44, 0x1529FC, 0x2757D1, 0xF534DD, 0xC0DB62, 0x95993C,
	0x439041, 0xFE5163, 0xABDEBB, 0xC561B7, 0x246E3A, 0x424DD2, 0xE00649,
	0x2EEA09, 0xD1921C, 0xFE1DEB, 0x1CB129, 0xA73EE8, 0x8235F5, 0x2EBB44,
	0x84E99C, 0x7026B4, 0x5F7E41, 0x3991D6, 0x398353, 0x39F49C, 0x845F8B,
	0xBDF928, 0x3B1FF8, 0x97FFDE, 0x05980F, 0xEF2F11, 0x8B5A0A, 0x6D1F6D,
	0x367ECF, 0x27CB09, 0xB74F46, 0x3F669E, 0x5FEA2D, 0x7527BA, 0xC7EBE5,
	0xF17B3D, 0x0739F7, 0x8A5292, 0xEA6BFB, 0x5FB11F, 0x8D5D08, 0x560330,
	0x46FC7B, 0x6BABF0, 0xCFBC20, 0x9AF436, 0x1DA9E3, 0x91615E, 0xE61B08,
	0x659985, 0x5F14A0, 0x68408D, 0xFFD880, 0x4D7327, 0x310606, 0x1556CA,
	0x73A8C9, 0x60E27B, 0xC08C6B,
};

static const double nnv_pio2s[8] = {
	1.57079625129699707031e+00, /* 0x3FF921FB, 0x40000000 */
	7.54978941586159635335e-08, /* 0x3E74442D, 0x00000000 */
	5.39030252995776476554e-15, /* 0x3CF84698, 0x80000000 */
	3.28200341580791294123e-22, /* 0x3B78CC51, 0x60000000 */
	1.27065575308067607349e-29, /* 0x39F01B83, 0x80000000 */
	1.22933308981111328932e-36, /* 0x387A2520, 0x40000000 */
	2.73370053816464559624e-44, /* 0x36E38222, 0x80000000 */
	2.16741683877804819444e-51, /* 0x3569F31D, 0x00000000 */
};

/* one 24-bit input chunk (nx = 1), single precision (prec = 0) */
static int nnv_rem_pio2_large1(double tx, int e0, double *y0)
{
	const int jk = 3, jp = 3, jx = 0;
	double f[20], q[20], fq[20], fw, z;
	int iq[20];
	int jv, q0, j, i, k, m, n, ih, jz, carry;

	jv = (e0 - 3) / 24;
	if (jv < 0)
		jv = 0;
	q0 = e0 - 24 * (jv + 1);

	/* set up f[0] to f[jx+jk] */
	j = jv - jx;
	m = jx + jk;
	for (i = 0; i <= m; i++, j++)
		f[i] = j < 0 ? 0.0 : (double)nnv_ipio2[j];

	/* compute q[0],...,q[jk] */
	for (i = 0; i <= jk; i++) {
		fw = 0.0;
		for (j = 0; j <= jx; j++)
			fw += tx * f[jx + i - j];
		q[i] = fw;
	}

	jz = jk;
recompute:
	/* distill q[] into iq[] reversingly */
	for (i = 0, j = jz, z = q[jz]; j > 0; i++, j--) {
		fw = (double)(nnv_i32)(0x1p-24 * z);
		iq[i] = (nnv_i32)(z - 0x1p24 * fw);
		z = q[j - 1] + fw;
	}

	/* compute n */
	z = scalbn(z, q0);
	z -= 8.0 * nnv_floor(z * 0.125);  /* trim off integer >= 8 */
	n = (nnv_i32)z;
	z -= (double)n;
	ih = 0;
	if (q0 > 0) {  /* need iq[jz-1] to determine n */
		i = iq[jz - 1] >> (24 - q0);
		n += i;
		iq[jz - 1] -= i << (24 - q0);
		ih = iq[jz - 1] >> (23 - q0);
	} else if (q0 == 0)
		ih = iq[jz - 1] >> 23;
	else if (z >= 0.5)
		ih = 2;

	if (ih > 0) {  /* q > 0.5 */
		n += 1;
		carry = 0;
		for (i = 0; i < jz; i++) {  /* compute 1-q */
			j = iq[i];
			if (carry == 0) {
				if (j != 0) {
					carry = 1;
					iq[i] = 0x1000000 - j;
				}
			} else
				iq[i] = 0xffffff - j;
		}
		if (q0 > 0) {  /* rare case: chance is 1 in 12 */
			switch (q0) {
			case 1:
				iq[jz - 1] &= 0x7fffff;
				break;
			case 2:
				iq[jz - 1] &= 0x3fffff;
				break;
			}
		}
		if (ih == 2) {
			z = 1.0 - z;
			if (carry != 0)
				z -= scalbn(1.0, q0);
		}
	}

	/* check if recomputation is needed */
	if (z == 0.0) {
		j = 0;
		for (i = jz - 1; i >= jk; i--)
			j |= iq[i];
		if (j == 0) {  /* need recomputation */
			for (k = 1; iq[jk - k] == 0; k++);  /* k = no. of terms needed */

			for (i = jz + 1; i <= jz + k; i++) {  /* add q[jz+1] to q[jz+k] */
				f[jx + i] = (double)nnv_ipio2[jv + i];
				fw = 0.0;
				for (j = 0; j <= jx; j++)
					fw += tx * f[jx + i - j];
				q[i] = fw;
			}
			jz += k;
			goto recompute;
		}
	}

	/* chop off zero terms */
	if (z == 0.0) {
		jz -= 1;
		q0 -= 24;
		while (iq[jz] == 0) {
			jz--;
			q0 -= 24;
		}
	} else {  /* break z into 24-bit if necessary */
		z = scalbn(z, -q0);
		if (z >= 0x1p24) {
			fw = (double)(nnv_i32)(0x1p-24 * z);
			iq[jz] = (nnv_i32)(z - 0x1p24 * fw);
			jz += 1;
			q0 += 24;
			iq[jz] = (nnv_i32)fw;
		} else
			iq[jz] = (nnv_i32)z;
	}

	/* convert integer "bit" chunk to floating-point value */
	fw = scalbn(1.0, q0);
	for (i = jz; i >= 0; i--) {
		q[i] = fw * (double)iq[i];
		fw *= 0x1p-24;
	}

	/* compute pio2[0,...,jp]*q[jz,...,0] */
	for (i = jz; i >= 0; i--) {
		fw = 0.0;
		for (k = 0; k <= jp && k <= jz - i; k++)
			fw += nnv_pio2s[k] * q[i + k];
		fq[jz - i] = fw;
	}

	/* compress fq[] into y[] (prec = 0) */
	fw = 0.0;
	for (i = jz; i >= 0; i--)
		fw += fq[i];
	*y0 = ih == 0 ? fw : -fw;
	return n & 7;
}

static int nnv_rem_pio2f(float x, double *y)
{
	static const double toint = 1.5 / 2.2204460492503131e-16;  /* 1.5/DBL_EPSILON */
	static const double invpio2 = 6.36619772367581382433e-01; /* 53 bits of 2/pi */
	static const double pio2_1 = 1.57079631090164184570e+00;  /* first 25 bits of pi/2 */
	static const double pio2_1t = 1.58932547735281966916e-08; /* pi/2 - pio2_1 */
	double tx, ty, fn;
	nnv_u32 ix;
	int n, sign, e0;

	ix = nnv_f2u(x) & 0x7fffffff;
	/* 25+53 bit pi is good enough for medium size */
	if (ix < 0x4dc90fdb) {  /* |x| ~< 2^28*(pi/2), medium size */
		/* Use a specialized rint() to get fn.  Assume round-to-nearest. */
		fn = (double)x * invpio2 + toint - toint;
		n = (nnv_i32)fn;
		*y = (double)x - fn * pio2_1 - fn * pio2_1t;
		return n;
	}
	if (ix >= 0x7f800000) {  /* x is inf or NaN */
		*y = (double)x - (double)x;
		return 0;
	}
	/* scale x into [2^23, 2^24-1] */
	sign = (int)(nnv_f2u(x) >> 31);
	e0 = (int)((ix >> 23) - (0x7f + 23));  /* e0 = ilogb(|x|)-23, positive */
	tx = (double)nnv_u2f(ix - (nnv_u32)(e0 << 23));
	n = nnv_rem_pio2_large1(tx, e0, &ty);
	if (sign) {
		*y = -ty;
		return -n;
	}
	*y = ty;
	return n;
}
