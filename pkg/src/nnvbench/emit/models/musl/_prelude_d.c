/* double bit conversions, needed by the double-precision model internals */
static nnv_u64 nnv_d2u(double x) { union { double d; nnv_u64 u; } c; c.d = x; return c.u; }
static double nnv_u2d(nnv_u64 u) { union { double d; nnv_u64 u; } c; c.u = u; return c.d; }
