"""Bit-exact binary32 math-function models.

The kernels mirror, operation for operation, the musl-lineage C sources
vendored under nnvbench.emit (FDLIBM-derived float transcendentals), so the
oracle's verdicts and the emitted C share one semantics. Scalar and batch
entry points run the same jitted code.
"""

from __future__ import annotations

import numpy as np

from nnvbench import _native as _n

expf = _n.expf
expm1f = _n.expm1f
logf = _n.logf
log1pf = _n.log1pf
tanhf = _n.tanhf
erff = _n.erff
sqrtf = _n.sqrtf
fabsf = _n.fabsf
fmaxf = _n.fmaxf
sinf = _n.sinf
cosf = _n.cosf
acosf = _n.acosf
asinf = _n.asinf
atanhf = _n.atanhf

relu = _n.relu
step = _n.step
elu = _n.elu
gaussian = _n.gaussian
gelu = _n.gelu
glu = _n.glu
logistic = _n.logistic
logistic_tanh_form = _n.logistic_tanh_form
softplus = _n.softplus
softsign = _n.softsign
swish = _n.swish

# name -> (scalar kernel, batch driver, C model sources needed, in link order)
MATH_KERNELS = {
    "expf": (_n.expf, _n.batch_expf, ("scalbnf", "expf")),
    "expm1f": (_n.expm1f, _n.batch_expm1f, ("expm1f",)),
    "logf": (_n.logf, _n.batch_logf, ("logf",)),
    "log1pf": (_n.log1pf, _n.batch_log1pf, ("log1pf",)),
    "tanhf": (_n.tanhf, _n.batch_tanhf, ("expm1f", "tanhf")),
    "erff": (_n.erff, _n.batch_erff, ("scalbnf", "expf", "fabsf", "erff")),
    "sqrtf": (_n.sqrtf, _n.batch_sqrtf, ("sqrtf",)),
    "fabsf": (_n.fabsf, _n.batch_fabsf, ("fabsf",)),
    "fmaxf": (_n.fmaxf, _n.batch_fmaxf, ("fmaxf",)),
    "sinf": (_n.sinf, _n.batch_sinf, ("scalbn", "floor", "rem_pio2f", "sincosf_kernels", "sinf")),
    "cosf": (_n.cosf, _n.batch_cosf, ("scalbn", "floor", "rem_pio2f", "sincosf_kernels", "cosf")),
    "acosf": (_n.acosf, _n.batch_acosf, ("sqrtf", "acosf")),
    "asinf": (_n.asinf, _n.batch_asinf, ("sqrt", "fabsf", "asinf")),
    "atanhf": (_n.atanhf, _n.batch_atanhf, ("log1pf", "atanhf")),
}

ACTIVATION_KERNELS = {
    "relu": (_n.relu, _n.batch_relu, ()),
    "step": (_n.step, _n.batch_step, ()),
    "elu": (_n.elu, _n.batch_elu, ("scalbnf", "expf")),
    "gaussian": (_n.gaussian, _n.batch_gaussian, ("scalbnf", "expf")),
    "logistic": (_n.logistic, _n.batch_logistic, ("scalbnf", "expf")),
    "logistic_tanh_form": (_n.logistic_tanh_form, _n.batch_logistic_tanh_form, ("expm1f", "tanhf")),
    "gelu": (_n.gelu, _n.batch_gelu, ("scalbnf", "expf", "fabsf", "erff")),
    "glu": (_n.glu, _n.batch_glu, ("scalbnf", "expf")),
    "softplus": (_n.softplus, _n.batch_softplus, ("scalbnf", "expf", "logf")),
    "softsign": (_n.softsign, _n.batch_softsign, ("fabsf",)),
    "swish": (_n.swish, _n.batch_swish, ("scalbnf", "expf")),
    "tanh": (_n.tanhf, _n.batch_tanhf, ("expm1f", "tanhf")),
}

_ALL = {**MATH_KERNELS, **ACTIVATION_KERNELS}


def kernel(name: str):
    """(scalar, batch, c_deps) for a registered kernel name."""
    return _ALL[name]


def c_model_deps(name: str) -> tuple[str, ...]:
    return _ALL[name][2]


def batch_apply(name: str, xs: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
    """Evaluate a unary kernel over a float32 array."""
    xs = np.ascontiguousarray(xs, dtype=np.float32)
    if out is None:
        out = np.empty_like(xs)
    _ALL[name][1](xs, out)
    return out


def scalar_apply(name: str, x) -> np.float32:
    return np.float32(_ALL[name][0](np.float32(x)))


__all__ = [
    "acosf", "asinf", "atanhf", "cosf", "erff", "expf", "expm1f", "fabsf",
    "fmaxf", "log1pf", "logf", "sinf", "sqrtf", "tanhf",
    "elu", "gaussian", "gelu", "glu", "logistic", "logistic_tanh_form",
    "relu", "softplus", "softsign", "step", "swish",
    "MATH_KERNELS", "ACTIVATION_KERNELS", "kernel", "c_model_deps",
    "batch_apply", "scalar_apply",
]
