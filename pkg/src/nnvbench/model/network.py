"""Network container and bit-exact evaluation.

Evaluation compiles the layer list once into an int32 program plus a flat
float32 weight buffer and runs the single jitted interpreter in _native.
Results are identical for batch size 1 and N (batch lanes are independent),
and identical to the emitted C, which writes the same loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from nnvbench import _native as _n
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
from nnvbench.model.tensor import Tensor

LayerSpec = (
    Dense | Conv1D | AvgPool | MaxPool | BatchNorm | LayerNorm | SoftMax
    | Activation | ZeroPad | SllResidual
)


@dataclass
class Network:
    layers: list
    input_dim: int
    _compiled: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        dim = self.input_dim
        if dim < 1:
            raise ValueError("input_dim must be positive")
        for layer in self.layers:
            dim = layer.out_dim(dim)  # raises on any dimension mismatch
        self.output_dim = dim

    @property
    def max_dim(self) -> int:
        dim = self.input_dim
        m = dim
        for layer in self.layers:
            dim = layer.out_dim(dim)
            m = max(m, dim)
        return m

    def parameter_count(self) -> int:
        """Number of weight scalars the C emitter materializes."""
        return sum(layer.emitted_params() for layer in self.layers)

    def compile(self):
        if self._compiled is not None:
            return self._compiled
        prog = []
        chunks: list[np.ndarray] = []
        off = 0

        def push(arr) -> int:
            nonlocal off
            a = np.ascontiguousarray(arr, dtype=np.float32).reshape(-1)
            chunks.append(a)
            start = off
            off += a.size
            return start

        dim = self.input_dim
        for layer in self.layers:
            nxt = layer.out_dim(dim)
            if isinstance(layer, Dense):
                active = layer.active_cols if layer.active_cols is not None else dim
                prog.append([_n.OP_DENSE, dim, nxt, push(layer.w), push(layer.b), active, 0, 0])
            elif isinstance(layer, Activation):
                prog.append([_n.OP_ACT, dim, int(layer.kind), 0, 0, 0, 0, 0])
            elif isinstance(layer, Conv1D):
                prog.append([
                    _n.OP_CONV1D, dim, nxt, push(layer.kernel),
                    layer.kernel.shape[0], push([layer.bias]), layer.stride, 0,
                ])
            elif isinstance(layer, AvgPool):
                prog.append([_n.OP_AVGPOOL, dim, nxt, layer.window, layer.stride, 0, 0, 0])
            elif isinstance(layer, MaxPool):
                prog.append([_n.OP_MAXPOOL, dim, nxt, layer.window, layer.stride, 0, 0, 0])
            elif isinstance(layer, BatchNorm):
                prog.append([
                    _n.OP_BATCHNORM, dim, push(layer.gamma), push(layer.beta),
                    push(layer.mean), push(layer.var), push([layer.eps]), 0,
                ])
            elif isinstance(layer, LayerNorm):
                prog.append([
                    _n.OP_LAYERNORM, dim, push(layer.gamma), push(layer.beta),
                    push([layer.eps]), 0, 0, 0,
                ])
            elif isinstance(layer, SoftMax):
                prog.append([_n.OP_SOFTMAX, dim, 0, 0, 0, 0, 0, 0])
            elif isinstance(layer, ZeroPad):
                prog.append([_n.OP_ZEROPAD, dim, nxt, 0, 0, 0, 0, 0])
            elif isinstance(layer, SllResidual):
                prog.append([
                    _n.OP_SLL, dim, push(layer.w), push(layer.b), push(layer.v),
                    layer.active_cols, 0, 0,
                ])
            else:
                raise TypeError(f"unknown layer {layer!r}")
            dim = nxt

        wbuf = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.float32)
        wbuf.setflags(write=False)
        self._compiled = (np.asarray(prog, dtype=np.int32).reshape(len(prog), 8), wbuf)
        return self._compiled

    def eval_columns(self, xcols: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        """Evaluate a batch laid out (in_dim, B); returns (out_dim, B).

        Wide batches are processed in column chunks so the (max_dim, chunk)
        scratch stays cache-resident; chunking cannot change results because
        batch lanes are independent.
        """
        prog, wbuf = self.compile()
        xcols = np.ascontiguousarray(xcols, dtype=np.float32)
        if xcols.shape[0] != self.input_dim:
            raise ValueError(f"expected {self.input_dim} input rows, got {xcols.shape[0]}")
        nb = xcols.shape[1]
        m = self.max_dim
        if out is None:
            out = np.empty((self.output_dim, nb), dtype=np.float32)
        chunk = max(_n.TILE, min(nb, (1 << 19) // max(1, m)))
        buf_a = np.empty((m, chunk), dtype=np.float32)
        buf_b = np.empty((m, chunk), dtype=np.float32)
        buf_t = np.empty((m, chunk), dtype=np.float32)
        out_chunk = np.empty((self.output_dim, chunk), dtype=np.float32)
        pos = 0
        while pos < nb:
            k = min(chunk, nb - pos)
            if k == chunk:
                xc = np.ascontiguousarray(xcols[:, pos:pos + k])
                _n.net_eval_batch(prog, wbuf, xc, buf_a, buf_b, buf_t, out_chunk)
                out[:, pos:pos + k] = out_chunk
            else:
                # tail: fresh contiguous buffers keep one fast specialization
                xc = np.ascontiguousarray(xcols[:, pos:pos + k])
                ba = np.empty((m, k), dtype=np.float32)
                bb = np.empty((m, k), dtype=np.float32)
                bt = np.empty((m, k), dtype=np.float32)
                oc = np.empty((self.output_dim, k), dtype=np.float32)
                _n.net_eval_batch(prog, wbuf, xc, ba, bb, bt, oc)
                out[:, pos:pos + k] = oc
            pos += k
        return out

    def eval_batch(self, xs: np.ndarray) -> np.ndarray:
        """Evaluate samples laid out (B, in_dim); returns (B, out_dim)."""
        xs = np.ascontiguousarray(xs, dtype=np.float32)
        if xs.ndim != 2 or xs.shape[1] != self.input_dim:
            raise ValueError(f"expected (B, {self.input_dim}) samples, got {xs.shape}")
        return self.eval_columns(np.ascontiguousarray(xs.T)).T

    def eval(self, x) -> np.ndarray:
        """Evaluate one input (Tensor or 1-D array); returns 1-D float32."""
        if isinstance(x, Tensor):
            x = x.data
        x = np.ascontiguousarray(x, dtype=np.float32).reshape(-1)
        if x.size != self.input_dim:
            raise ValueError(f"expected {self.input_dim} inputs, got {x.size}")
        return self.eval_columns(x.reshape(-1, 1))[:, 0]
