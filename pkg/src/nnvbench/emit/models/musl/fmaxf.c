/* derived from musl src/math/fmaxf.c */
float fmaxf(float x, float y)
{
	if (x != x)
		return y;
	if (y != y)
		return x;
	/* handle signed zeros, fmax(+0, -0) == +0 */
	if ((nnv_f2u(x) >> 31) != (nnv_f2u(y) >> 31))
		return (nnv_f2u(x) >> 31) ? y : x;
	return x < y ? y : x;
}
