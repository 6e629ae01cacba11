/* derived from musl src/math/fabsf.c */
float fabsf(float x)
{
	return nnv_u2f(nnv_f2u(x) & 0x7fffffff);
}
