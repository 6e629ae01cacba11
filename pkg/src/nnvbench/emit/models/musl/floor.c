/* derived from musl src/math/floor.c */
static double nnv_floor(double x)
{
	union { double f; nnv_u64 i; } u = { x };
	int e = (int)(u.i >> 52 & 0x7ff);
	double y;

	if (e >= 0x3ff + 52 || x == 0)
		return x;
	/* y = int(x) - x, where int(x) is an integer neighbor of x */
	if (u.i >> 63)
		y = x - 0x1p52 + 0x1p52 - x;
	else
		y = x + 0x1p52 - 0x1p52 - x;
	/* special case because of non-nearest rounding modes */
	if (e <= 0x3ff - 1)
		return u.i >> 63 ? -1 : 0;
	if (y > 0)
		return x + y - 1;
	return x + y;
}
