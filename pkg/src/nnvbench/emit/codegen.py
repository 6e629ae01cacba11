"""Deterministic C emission of benchmark instances.

One instance becomes one self-contained SV-COMP ReachSafety file: intrinsic
declarations, optional operational-model sources, activation helpers, the
network weights and evaluation function, and a main() that draws nondet
inputs, assumes the pre-condition, and reaches reach_error() iff the
post-condition is violated. Loops and expression shapes mirror the Python
evaluator exactly; weights are hexadecimal float literals, so parsing them
back reproduces the stored bits.
"""

from __future__ import annotations

import numpy as np

from nnvbench import harness as H
from nnvbench.bits import c_literal
from nnvbench.emit.bundles import ModelBundle, bundle_by_name
from nnvbench.fmath import ACTIVATION_KERNELS, MATH_KERNELS, c_model_deps
from nnvbench.model.layers import (
    Activation,
    AvgPool,
    BatchNorm,
    Conv1D,
    Dense,
    LayerNorm,
    MaxPool,
    SllResidual,
    SoftMax,
    ZeroPad,
)
from nnvbench.model.network import Network


class EmissionError(ValueError):
    pass


# activation helper bodies; these are the pinned formulas, identical to the
# kernels in nnvbench._native
_ACT_HELPERS = {
    "relu": "static float nnv_relu(float x) { return x < 0.0f ? 0.0f : x; }",
    "step": "static float nnv_step(float x) { return x < 0.0f ? 0.0f : 1.0f; }",
    "elu": "static float nnv_elu(float x) { if (x < 0.0f) return expf(x) - 1.0f; return x; }",
    "gaussian": "static float nnv_gaussian(float x) { return expf(-(x * x)); }",
    "logistic": (
        "static float nnv_logistic(float x) { float e = expf(-x); return 1.0f / (1.0f + e); }"
    ),
    "logistic_tanh_form": (
        "static float nnv_logistic_tanh_form(float x) "
        "{ return 0.5f * (1.0f + tanhf(x / 2.0f)); }"
    ),
    "gelu": (
        "static float nnv_gelu(float x) "
        "{ float t = x / 0x1.6a09e6p+0f; return 0.5f * x * (1.0f + erff(t)); }"
    ),
    "softplus": (
        "static float nnv_softplus(float x) { float e = expf(x); return logf(1.0f + e); }"
    ),
    "softsign": (
        "static float nnv_softsign(float x) { float t = 1.0f + fabsf(x); return x / t; }"
    ),
    "swish": "static float nnv_swish(float x) { return x * nnv_logistic(x); }",
    "glu": "static float nnv_glu(float x, float y) { return x * nnv_logistic(y); }",
    "tanh": "static float nnv_tanh(float x) { return tanhf(x); }",
}
_ACT_HELPER_DEPS = {"swish": ("logistic",), "glu": ("logistic",)}

# libm functions each activation helper calls
_ACT_LIBM = {
    "relu": (), "step": (),
    "elu": ("expf",), "gaussian": ("expf",), "logistic": ("expf",),
    "logistic_tanh_form": ("tanhf",), "gelu": ("erff",),
    "softplus": ("expf", "logf"), "softsign": ("fabsf",),
    "swish": ("expf",), "glu": ("expf",), "tanh": ("tanhf",),
}


def _collect_expr_fns(e, math_fns: set, act_fns: set) -> None:
    if isinstance(e, H.Call):
        if e.fn in MATH_KERNELS:
            math_fns.add(e.fn)
        elif e.fn in ACTIVATION_KERNELS:
            act_fns.add(e.fn)
        else:
            raise EmissionError(f"unknown function {e.fn!r} in post-condition")
        for a in e.args:
            _collect_expr_fns(a, math_fns, act_fns)
    elif isinstance(e, H.Abs):
        math_fns.add("fabsf")
        _collect_expr_fns(e.a, math_fns, act_fns)
    elif isinstance(e, (H.Neg, H.Not)):
        _collect_expr_fns(e.a, math_fns, act_fns)
    elif isinstance(e, H.Arith):
        _collect_expr_fns(e.a, math_fns, act_fns)
        _collect_expr_fns(e.b, math_fns, act_fns)
    elif isinstance(e, H.Cmp):
        _collect_expr_fns(e.a, math_fns, act_fns)
        _collect_expr_fns(e.b, math_fns, act_fns)
    elif isinstance(e, (H.And, H.Or)):
        for item in e.items:
            _collect_expr_fns(item, math_fns, act_fns)


def _collect_network_fns(net: Network, math_fns: set, act_fns: set) -> None:
    for layer in net.layers:
        if isinstance(layer, Activation):
            act_fns.add(layer.kind.kernel_name)
        elif isinstance(layer, (BatchNorm, LayerNorm)):
            math_fns.add("sqrtf")
        elif isinstance(layer, SoftMax):
            math_fns.add("expf")


def render_expr(e, input_name) -> str:
    """C expression text; input_name(i) names the i-th nondet input."""

    def r(node) -> str:
        if isinstance(node, H.Const):
            return c_literal(node.value)
        if isinstance(node, H.Input):
            return input_name(node.index)
        if isinstance(node, H.Output):
            return f"y[{node.index}]"
        if isinstance(node, H.Call):
            fn = node.fn if node.fn in MATH_KERNELS else f"nnv_{node.fn}"
            return f"{fn}({', '.join(r(a) for a in node.args)})"
        if isinstance(node, H.Arith):
            return f"({r(node.a)} {node.op} {r(node.b)})"
        if isinstance(node, H.Neg):
            return f"(-{r(node.a)})"
        if isinstance(node, H.Abs):
            return f"fabsf({r(node.a)})"
        if isinstance(node, H.Cmp):
            return f"({r(node.a)} {node.op} {r(node.b)})"
        if isinstance(node, H.And):
            return "(" + " && ".join(r(i) for i in node.items) + ")"
        if isinstance(node, H.Or):
            return "(" + " || ".join(r(i) for i in node.items) + ")"
        if isinstance(node, H.Not):
            return f"(!{r(node.a)})"
        raise EmissionError(f"cannot render {node!r}")

    return r(e)


def _array_literal(name: str, values: np.ndarray) -> str:
    vals = [c_literal(v) for v in np.ascontiguousarray(values, dtype=np.float32).reshape(-1)]
    lines = [f"static const float {name}[{len(vals)}] = {{"]
    for i in range(0, len(vals), 8):
        lines.append("    " + ", ".join(vals[i:i + 8]) + ",")
    lines.append("};")
    return "\n".join(lines)


def render_network(net: Network) -> str:
    """Weight arrays plus `void nnv_net(const float *x, float *y)`."""
    parts: list[str] = []
    body: list[str] = []
    maxdim = net.max_dim
    dim = net.input_dim

    needs_j = any(
        isinstance(l, (Dense, Conv1D, AvgPool, MaxPool, SllResidual)) for l in net.layers
    )
    needs_tv = any(isinstance(l, (SoftMax, SllResidual)) for l in net.layers)
    needs_nxt = any(
        isinstance(l, (Dense, Conv1D, AvgPool, MaxPool, ZeroPad, SllResidual))
        for l in net.layers
    )

    body.append("void nnv_net(const float *x, float *y) {")
    scratch = f"    float ba[{maxdim}]"
    if needs_nxt:
        scratch += f", bb[{maxdim}]"
    if needs_tv:
        scratch += f", tv[{maxdim}]"
    body.append(scratch + ";")
    if needs_nxt:
        body.append("    float *cur = ba, *nxt = bb, *sw;")
    else:
        body.append("    float *cur = ba;")
    body.append("    int i" + (", j" if needs_j else "") + ";")
    body.append(f"    for (i = 0; i < {dim}; i++) cur[i] = x[i];")

    def swap():
        body.append("    sw = cur; cur = nxt; nxt = sw;")

    for k, layer in enumerate(net.layers):
        nxt_dim = layer.out_dim(dim)
        if isinstance(layer, Dense):
            active = layer.active_cols if layer.active_cols is not None else dim
            parts.append(_array_literal(f"nnv_w{k}", layer.w[:, :active]))
            parts.append(_array_literal(f"nnv_b{k}", layer.b))
            body.append(f"    for (i = 0; i < {nxt_dim}; i++) {{")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (j = 0; j < {active}; j++) acc += nnv_w{k}[i * {active} + j] * cur[j];")
            body.append(f"        nxt[i] = acc + nnv_b{k}[i];")
            body.append("    }")
            swap()
        elif isinstance(layer, Activation):
            fn = f"nnv_{layer.kind.kernel_name}"
            body.append(f"    for (i = 0; i < {dim}; i++) cur[i] = {fn}(cur[i]);")
        elif isinstance(layer, Conv1D):
            kw = layer.kernel.shape[0]
            parts.append(_array_literal(f"nnv_k{k}", layer.kernel))
            body.append(f"    for (i = 0; i < {nxt_dim}; i++) {{")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (j = 0; j < {kw}; j++) acc += nnv_k{k}[j] * cur[i * {layer.stride} + j];")
            body.append(f"        nxt[i] = acc + {c_literal(layer.bias)};")
            body.append("    }")
            swap()
        elif isinstance(layer, AvgPool):
            body.append(f"    for (i = 0; i < {nxt_dim}; i++) {{")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (j = 0; j < {layer.window}; j++) acc += cur[i * {layer.stride} + j];")
            body.append(f"        nxt[i] = acc / {float(layer.window)}f;")
            body.append("    }")
            swap()
        elif isinstance(layer, MaxPool):
            body.append(f"    for (i = 0; i < {nxt_dim}; i++) {{")
            body.append(f"        float m = cur[i * {layer.stride}];")
            body.append(f"        for (j = 1; j < {layer.window}; j++) {{")
            body.append(f"            float v = cur[i * {layer.stride} + j];")
            body.append("            if (v > m) m = v;")
            body.append("        }")
            body.append("        nxt[i] = m;")
            body.append("    }")
            swap()
        elif isinstance(layer, BatchNorm):
            parts.append(_array_literal(f"nnv_g{k}", layer.gamma))
            parts.append(_array_literal(f"nnv_be{k}", layer.beta))
            parts.append(_array_literal(f"nnv_mu{k}", layer.mean))
            parts.append(_array_literal(f"nnv_var{k}", layer.var))
            body.append(f"    for (i = 0; i < {dim}; i++) {{")
            body.append(f"        float s = sqrtf(nnv_var{k}[i] + {c_literal(layer.eps)});")
            body.append(f"        float t = cur[i] - nnv_mu{k}[i];")
            body.append("        float q = t / s;")
            body.append(f"        cur[i] = nnv_g{k}[i] * q + nnv_be{k}[i];")
            body.append("    }")
        elif isinstance(layer, LayerNorm):
            parts.append(_array_literal(f"nnv_g{k}", layer.gamma))
            parts.append(_array_literal(f"nnv_be{k}", layer.beta))
            body.append("    {")
            body.append("        float acc = 0.0f, acc2 = 0.0f, mu, var, s;")
            body.append(f"        for (i = 0; i < {dim}; i++) acc += cur[i];")
            body.append(f"        mu = acc / {float(dim)}f;")
            body.append(f"        for (i = 0; i < {dim}; i++) {{ float t = cur[i] - mu; acc2 += t * t; }}")
            body.append(f"        var = acc2 / {float(dim)}f;")
            body.append(f"        s = sqrtf(var + {c_literal(layer.eps)});")
            body.append(f"        for (i = 0; i < {dim}; i++) {{")
            body.append("            float t = cur[i] - mu;")
            body.append("            float q = t / s;")
            body.append(f"            cur[i] = nnv_g{k}[i] * q + nnv_be{k}[i];")
            body.append("        }")
            body.append("    }")
        elif isinstance(layer, SoftMax):
            body.append("    {")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (i = 0; i < {dim}; i++) {{ tv[i] = expf(cur[i]); acc += tv[i]; }}")
            body.append(f"        for (i = 0; i < {dim}; i++) cur[i] = tv[i] / acc;")
            body.append("    }")
        elif isinstance(layer, ZeroPad):
            body.append(f"    for (i = 0; i < {dim}; i++) nxt[i] = cur[i];")
            body.append(f"    for (i = {dim}; i < {nxt_dim}; i++) nxt[i] = 0.0f;")
            swap()
        elif isinstance(layer, SllResidual):
            d = layer.w.shape[0]
            a = layer.active_cols
            parts.append(_array_literal(f"nnv_w{k}", layer.w[:, :a]))
            parts.append(_array_literal(f"nnv_b{k}", layer.b))
            parts.append(_array_literal(f"nnv_v{k}", layer.v))
            body.append(f"    for (i = 0; i < {d}; i++) {{")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (j = 0; j < {a}; j++) acc += nnv_w{k}[i * {a} + j] * cur[j];")
            body.append(f"        acc = acc + nnv_b{k}[i];")
            body.append("        tv[i] = acc < 0.0f ? 0.0f : acc;")
            body.append("    }")
            body.append(f"    for (i = 0; i < {d}; i++) {{")
            body.append("        float acc = 0.0f;")
            body.append(f"        for (j = 0; j < {d}; j++) acc += nnv_v{k}[i * {d} + j] * tv[j];")
            body.append("        nxt[i] = cur[i] - acc;")
            body.append("    }")
            swap()
        else:
            raise EmissionError(f"cannot emit layer {layer!r}")
        dim = nxt_dim

    body.append(f"    for (i = 0; i < {dim}; i++) y[i] = cur[i];")
    body.append("}")
    return "\n".join(parts + [""] + body)


def _act_closure(act_fns: set) -> list[str]:
    """Helper names in emission order, dependencies first."""
    ordered: list[str] = []
    seen: set[str] = set()

    def visit(fn: str):
        if fn in seen:
            return
        seen.add(fn)
        for dep in _ACT_HELPER_DEPS.get(fn, ()):
            visit(dep)
        ordered.append(fn)

    for fn in sorted(act_fns):
        visit(fn)
    return ordered


def emit_instance(instance, models: str = "none") -> str:
    """Render one benchmark instance as self-contained C source text."""
    bundle = bundle_by_name(models)
    math_fns: set[str] = set()
    act_fns: set[str] = set()
    _collect_expr_fns(instance.harness.post, math_fns, act_fns)
    if instance.harness.pre_rel is not None:
        _collect_expr_fns(instance.harness.pre_rel, math_fns, act_fns)
    is_net = isinstance(instance.subject, Network)
    if is_net:
        _collect_network_fns(instance.subject, math_fns, act_fns)

    acts = _act_closure(act_fns)
    libm_needed = set(math_fns)
    for fn in acts:
        libm_needed.update(_ACT_LIBM[fn])

    if bundle.name != "none":
        missing = sorted(fn for fn in libm_needed if fn not in bundle.provides)
        if missing:
            raise EmissionError(
                f"{instance.name}: model bundle '{bundle.name}' does not provide "
                + ", ".join(missing)
            )
        sources = set()
        for fn in sorted(libm_needed):
            sources.update(c_model_deps(fn))
        try:
            model_text = bundle.amalgamate(sources)
        except FileNotFoundError as exc:
            raise EmissionError(str(exc)) from exc
    else:
        model_text = ""

    verdict_c = "unsafe (reach_error is reachable)" if instance.verdict.outcome == "unsafe" \
        else "safe (reach_error is unreachable)"
    head = [
        f"/* {instance.name}: {instance.category} / {instance.property_kind}",
        f" * Expected verdict: {verdict_c}.",
        " * Self-contained SV-COMP ReachSafety task.",
        " */",
        "",
        "extern void abort(void);",
        "extern float __VERIFIER_nondet_float(void);",
        "extern void __VERIFIER_assume(_Bool cond);",
        "extern void reach_error(void);",
        "",
    ]
    if bundle.name == "none":
        if libm_needed:
            head.append("#include <math.h>")
            head.append("")
    else:
        head.append(model_text)

    for fn in acts:
        head.append(_ACT_HELPERS[fn])
    if acts:
        head.append("")

    if is_net:
        head.append(render_network(instance.subject))
        head.append("")

    n_in = len(instance.harness.inputs)
    name_of = (lambda i: f"x[{i}]") if is_net else (lambda i: f"x{i}")

    main = ["int main(void) {"]
    if is_net:
        n_out = instance.subject.output_dim
        main.append(f"    float x[{n_in}];")
        main.append(f"    float y[{2 * n_out if instance.paired else n_out}];")
    for i, spec in enumerate(instance.harness.inputs):
        var = name_of(i)
        decl = "" if is_net else "float "
        if spec.lo is not None and spec.hi is not None and spec.lo == spec.hi \
                and not spec.lo_strict and not spec.hi_strict:
            main.append(f"    {decl}{var} = {c_literal(spec.lo)};")
            continue
        main.append(f"    {decl}{var} = __VERIFIER_nondet_float();")
        conds = []
        if spec.lo is not None:
            op = ">" if spec.lo_strict else ">="
            conds.append(f"{var} {op} {c_literal(spec.lo)}")
        if spec.hi is not None:
            op = "<" if spec.hi_strict else "<="
            conds.append(f"{var} {op} {c_literal(spec.hi)}")
        if conds:
            main.append(f"    __VERIFIER_assume({' && '.join(conds)});")
    if instance.harness.pre_rel is not None:
        main.append(f"    __VERIFIER_assume({render_expr(instance.harness.pre_rel, name_of)});")
    if is_net:
        if instance.paired:
            d = instance.subject.input_dim
            main.append("    nnv_net(x, y);")
            main.append(f"    nnv_net(x + {d}, y + {instance.subject.output_dim});")
        else:
            main.append("    nnv_net(x, y);")
    post = render_expr(instance.harness.post, name_of)
    main.append(f"    if (!{post}) {{")
    main.append("        reach_error();")
    main.append("        abort();")
    main.append("    }")
    main.append("    return 0;")
    main.append("}")

    return "\n".join(head + main) + "\n"
