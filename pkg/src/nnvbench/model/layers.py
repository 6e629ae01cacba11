"""Layer specifications.

Weight arrays are float32 and frozen at construction. Each spec knows its
output dimension, validates against the incoming dimension, and reports the
number of weight scalars the C emitter materializes for it (the size
accounting used throughout).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from nnvbench import _native as _n


class ActivationKind(IntEnum):
    # codes match the evaluator's dispatch table
    ELU = _n.ACT_ELU
    GAUSSIAN = _n.ACT_GAUSSIAN
    GELU = _n.ACT_GELU
    GLU = _n.ACT_GLU
    LOGISTIC = _n.ACT_LOGISTIC
    RELU = _n.ACT_RELU
    SOFTPLUS = _n.ACT_SOFTPLUS
    SOFTSIGN = _n.ACT_SOFTSIGN
    STEP = _n.ACT_STEP
    TANH = _n.ACT_TANH

    @property
    def kernel_name(self) -> str:
        # in-network GLU is the unary Swish form x*logistic(x)
        return {
            ActivationKind.ELU: "elu",
            ActivationKind.GAUSSIAN: "gaussian",
            ActivationKind.GELU: "gelu",
            ActivationKind.GLU: "swish",
            ActivationKind.LOGISTIC: "logistic",
            ActivationKind.RELU: "relu",
            ActivationKind.SOFTPLUS: "softplus",
            ActivationKind.SOFTSIGN: "softsign",
            ActivationKind.STEP: "step",
            ActivationKind.TANH: "tanh",
        }[self]


def _f32(a) -> np.ndarray:
    arr = np.ascontiguousarray(a, dtype=np.float32)
    if not np.isfinite(arr).all():
        raise ValueError("layer weights must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Dense:
    w: np.ndarray  # (out, in)
    b: np.ndarray  # (out,)
    active_cols: int | None = None  # columns actually read (zero-pad fusion)

    def __post_init__(self):
        w = _f32(self.w)
        b = _f32(self.b)
        if w.ndim != 2 or b.ndim != 1 or w.shape[0] != b.shape[0]:
            raise ValueError(f"inconsistent dense dims w{w.shape} b{b.shape}")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "b", b)

    def out_dim(self, in_dim: int) -> int:
        if self.w.shape[1] != in_dim:
            raise ValueError(f"dense expects {self.w.shape[1]} inputs, got {in_dim}")
        return self.w.shape[0]

    def emitted_params(self) -> int:
        active = self.active_cols if self.active_cols is not None else self.w.shape[1]
        return self.w.shape[0] * active + self.b.shape[0]


@dataclass(frozen=True)
class Conv1D:
    kernel: np.ndarray  # (kw,)
    bias: float
    stride: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kernel", _f32(self.kernel))
        object.__setattr__(self, "bias", np.float32(self.bias))
        if self.stride < 1:
            raise ValueError("stride must be positive")

    def out_dim(self, in_dim: int) -> int:
        kw = self.kernel.shape[0]
        if in_dim < kw:
            raise ValueError(f"conv1d kernel {kw} wider than input {in_dim}")
        return (in_dim - kw) // self.stride + 1

    def emitted_params(self) -> int:
        return self.kernel.shape[0] + 1


@dataclass(frozen=True)
class AvgPool:
    window: int
    stride: int

    def out_dim(self, in_dim: int) -> int:
        if in_dim < self.window:
            raise ValueError("pool window wider than input")
        return (in_dim - self.window) // self.stride + 1

    def emitted_params(self) -> int:
        return 0


@dataclass(frozen=True)
class MaxPool:
    window: int
    stride: int

    def out_dim(self, in_dim: int) -> int:
        if in_dim < self.window:
            raise ValueError("pool window wider than input")
        return (in_dim - self.window) // self.stride + 1

    def emitted_params(self) -> int:
        return 0


BN_EPS = np.float32(1e-5)  # serialized with the network so emitted C matches


@dataclass(frozen=True)
class BatchNorm:
    gamma: np.ndarray
    beta: np.ndarray
    mean: np.ndarray
    var: np.ndarray
    eps: float = BN_EPS

    def __post_init__(self):
        for name in ("gamma", "beta", "mean", "var"):
            object.__setattr__(self, name, _f32(getattr(self, name)))
        object.__setattr__(self, "eps", np.float32(self.eps))
        d = self.gamma.shape[0]
        if not (self.beta.shape == self.mean.shape == self.var.shape == (d,)):
            raise ValueError("inconsistent batchnorm dims")
        if np.any(self.var < 0):
            raise ValueError("negative variance")

    def out_dim(self, in_dim: int) -> int:
        if self.gamma.shape[0] != in_dim:
            raise ValueError("batchnorm dim mismatch")
        return in_dim

    def emitted_params(self) -> int:
        return 4 * self.gamma.shape[0] + 1


@dataclass(frozen=True)
class LayerNorm:
    gamma: np.ndarray
    beta: np.ndarray
    eps: float = BN_EPS

    def __post_init__(self):
        object.__setattr__(self, "gamma", _f32(self.gamma))
        object.__setattr__(self, "beta", _f32(self.beta))
        object.__setattr__(self, "eps", np.float32(self.eps))
        if self.gamma.shape != self.beta.shape:
            raise ValueError("inconsistent layernorm dims")

    def out_dim(self, in_dim: int) -> int:
        if self.gamma.shape[0] != in_dim:
            raise ValueError("layernorm dim mismatch")
        return in_dim

    def emitted_params(self) -> int:
        return 2 * self.gamma.shape[0] + 1


@dataclass(frozen=True)
class SoftMax:
    def out_dim(self, in_dim: int) -> int:
        return in_dim

    def emitted_params(self) -> int:
        return 0


@dataclass(frozen=True)
class Activation:
    kind: ActivationKind

    def out_dim(self, in_dim: int) -> int:
        return in_dim

    def emitted_params(self) -> int:
        return 0


@dataclass(frozen=True)
class ZeroPad:
    width: int

    def out_dim(self, in_dim: int) -> int:
        if self.width < in_dim:
            raise ValueError("zero-pad narrower than input")
        return self.width

    def emitted_params(self) -> int:
        return 0


@dataclass(frozen=True)
class SllResidual:
    """1-Lipschitz residual layer x - V*relu(W x + b) with V = 2 W^T D^-1.

    D = diag(sum_j |W W^T|_ij q_j / q_i) is computed in binary32 at build
    time and frozen into V. q must be strictly positive. active_cols marks
    the live input columns when the layer follows a zero-pad (size
    accounting and emission skip the dead columns; the skipped products are
    exact +-0 terms).
    """

    w: np.ndarray  # (d, d)
    b: np.ndarray  # (d,)
    q: np.ndarray  # (d,) strictly positive
    v: np.ndarray  # (d, d) frozen 2 W^T D^-1
    active_cols: int

    def __post_init__(self):
        for name in ("w", "b", "q", "v"):
            object.__setattr__(self, name, _f32(getattr(self, name)))
        d = self.w.shape[0]
        if self.w.shape != (d, d) or self.v.shape != (d, d):
            raise ValueError("sll layer requires square weights")
        if self.b.shape != (d,) or self.q.shape != (d,):
            raise ValueError("inconsistent sll dims")
        if np.any(self.q <= 0):
            raise ValueError("q entries must be strictly positive")

    @classmethod
    def build(cls, w, b, q, active_cols: int | None = None) -> "SllResidual":
        """Compute D and freeze V in binary32, mirroring the emitted C."""
        w = np.ascontiguousarray(w, dtype=np.float32)
        b = np.ascontiguousarray(b, dtype=np.float32)
        q = np.ascontiguousarray(q, dtype=np.float32)
        d = w.shape[0]
        wwt = np.zeros((d, d), dtype=np.float32)
        for i in range(d):
            for j in range(d):
                acc = np.float32(0.0)
                for k in range(d):
                    acc = np.float32(acc + np.float32(w[i, k] * w[j, k]))
                wwt[i, j] = acc
        dd = np.zeros(d, dtype=np.float32)
        for i in range(d):
            acc = np.float32(0.0)
            for j in range(d):
                t = np.float32(np.abs(wwt[i, j]) * q[j])
                acc = np.float32(acc + np.float32(t / q[i]))
            dd[i] = acc
        # V_ij = 2 W_ji / D_j, with the exact-zero numerator short-circuited
        # so an all-zero row (D_j = 0) yields the identity map, not 0/0.
        v = np.zeros((d, d), dtype=np.float32)
        for i in range(d):
            for j in range(d):
                if w[j, i] != 0.0:
                    v[i, j] = np.float32(np.float32(np.float32(2.0) * w[j, i]) / dd[j])
        if not np.isfinite(v).all():
            raise ValueError("non-finite V; weights too large for binary32")
        return cls(w, b, q, v, active_cols if active_cols is not None else d)

    @property
    def d_diag(self) -> np.ndarray:
        """Recompute the frozen D diagonal (diagnostic; V is authoritative)."""
        d = self.w.shape[0]
        wwt = np.zeros((d, d), dtype=np.float32)
        for i in range(d):
            for j in range(d):
                acc = np.float32(0.0)
                for k in range(d):
                    acc = np.float32(acc + np.float32(self.w[i, k] * self.w[j, k]))
                wwt[i, j] = acc
        dd = np.zeros(d, dtype=np.float32)
        for i in range(d):
            acc = np.float32(0.0)
            for j in range(d):
                t = np.float32(np.abs(wwt[i, j]) * self.q[j])
                acc = np.float32(acc + np.float32(t / self.q[i]))
            dd[i] = acc
        return dd

    def out_dim(self, in_dim: int) -> int:
        if self.w.shape[0] != in_dim:
            raise ValueError("sll dim mismatch")
        return in_dim

    def emitted_params(self) -> int:
        d = self.w.shape[0]
        return d * self.active_cols + d + d * d  # W (live cols) + b + V
