/* Operational-model prelude: bit conversions shared by the model sources.
 * The models are derived from the musl libm single-precision routines
 * (FDLIBM/FreeBSD msun lineage), reduced to standalone C99 with no external
 * dependencies. Compile with FLT_EVAL_METHOD == 0 semantics and without
 * FP contraction (e.g. gcc -std=c11 -ffp-contract=off -fno-builtin).
 */

typedef unsigned int nnv_u32;
typedef unsigned long long nnv_u64;
typedef int nnv_i32;

static nnv_u32 nnv_f2u(float x) { union { float f; nnv_u32 u; } c; c.f = x; return c.u; }
static float nnv_u2f(nnv_u32 u) { union { float f; nnv_u32 u; } c; c.u = u; return c.f; }
