"""Versioned text serialization for networks.

Weights are stored as exact 8-digit hexadecimal binary32 bit patterns, so a
round trip is lossless by construction. The format is line-oriented and
human-readable:

    nnvnet 1
    input_dim 3
    dense out 2 active 3
    w 3f800000 00000000 ...
    b 00000000 00000000
    activation relu
    end
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from nnvbench.model.layers import (
    Activation,
    ActivationKind,
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

FORMAT_NAME = "nnvnet"
FORMAT_VERSION = 1


def _hexwords(a: np.ndarray) -> str:
    return " ".join(format(int(b), "08x") for b in np.ascontiguousarray(a, dtype=np.float32).reshape(-1).view(np.uint32))


def _unhex(words: list[str]) -> np.ndarray:
    return np.asarray([int(w, 16) for w in words], dtype=np.uint32).view(np.float32)


def network_to_text(net: Network) -> str:
    lines = [f"{FORMAT_NAME} {FORMAT_VERSION}", f"input_dim {net.input_dim}"]
    for layer in net.layers:
        if isinstance(layer, Dense):
            active = layer.active_cols if layer.active_cols is not None else layer.w.shape[1]
            lines.append(f"dense out {layer.w.shape[0]} in {layer.w.shape[1]} active {active}")
            lines.append("w " + _hexwords(layer.w))
            lines.append("b " + _hexwords(layer.b))
        elif isinstance(layer, Activation):
            lines.append(f"activation {layer.kind.name.lower()}")
        elif isinstance(layer, Conv1D):
            lines.append(f"conv1d kw {layer.kernel.shape[0]} stride {layer.stride}")
            lines.append("k " + _hexwords(layer.kernel))
            lines.append("b " + _hexwords(np.asarray([layer.bias])))
        elif isinstance(layer, AvgPool):
            lines.append(f"avgpool window {layer.window} stride {layer.stride}")
        elif isinstance(layer, MaxPool):
            lines.append(f"maxpool window {layer.window} stride {layer.stride}")
        elif isinstance(layer, BatchNorm):
            lines.append(f"batchnorm dim {layer.gamma.shape[0]}")
            lines.append("gamma " + _hexwords(layer.gamma))
            lines.append("beta " + _hexwords(layer.beta))
            lines.append("mean " + _hexwords(layer.mean))
            lines.append("var " + _hexwords(layer.var))
            lines.append("eps " + _hexwords(np.asarray([layer.eps])))
        elif isinstance(layer, LayerNorm):
            lines.append(f"layernorm dim {layer.gamma.shape[0]}")
            lines.append("gamma " + _hexwords(layer.gamma))
            lines.append("beta " + _hexwords(layer.beta))
            lines.append("eps " + _hexwords(np.asarray([layer.eps])))
        elif isinstance(layer, SoftMax):
            lines.append("softmax")
        elif isinstance(layer, ZeroPad):
            lines.append(f"zeropad width {layer.width}")
        elif isinstance(layer, SllResidual):
            lines.append(f"sll dim {layer.w.shape[0]} active {layer.active_cols}")
            lines.append("w " + _hexwords(layer.w))
            lines.append("b " + _hexwords(layer.b))
            lines.append("q " + _hexwords(layer.q))
            lines.append("v " + _hexwords(layer.v))
        else:
            raise TypeError(f"unknown layer {layer!r}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def network_from_text(text: str) -> Network:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    it = iter(lines)

    def expect_data(tag: str) -> np.ndarray:
        ln = next(it)
        head, _, rest = ln.partition(" ")
        if head != tag:
            raise ValueError(f"expected '{tag}' line, got {ln[:40]!r}")
        return _unhex(rest.split())

    header = next(it).split()
    if header[:1] != [FORMAT_NAME] or int(header[1]) != FORMAT_VERSION:
        raise ValueError(f"unsupported network format header: {header}")
    kw, val = next(it).split()
    if kw != "input_dim":
        raise ValueError("missing input_dim")
    input_dim = int(val)

    layers = []
    for ln in it:
        tok = ln.split()
        kind = tok[0]
        if kind == "end":
            break
        args = dict(zip(tok[1::2], tok[2::2]))
        if kind == "dense":
            out, inn = int(args["out"]), int(args["in"])
            w = expect_data("w").reshape(out, inn)
            b = expect_data("b")
            layers.append(Dense(w, b, active_cols=int(args["active"])))
        elif kind == "activation":
            layers.append(Activation(ActivationKind[tok[1].upper()]))
        elif kind == "conv1d":
            k = expect_data("k")
            b = expect_data("b")
            layers.append(Conv1D(k, float(b[0]), stride=int(args["stride"])))
        elif kind == "avgpool":
            layers.append(AvgPool(int(args["window"]), int(args["stride"])))
        elif kind == "maxpool":
            layers.append(MaxPool(int(args["window"]), int(args["stride"])))
        elif kind == "batchnorm":
            g = expect_data("gamma")
            be = expect_data("beta")
            mu = expect_data("mean")
            var = expect_data("var")
            eps = expect_data("eps")[0]
            layers.append(BatchNorm(g, be, mu, var, eps))
        elif kind == "layernorm":
            g = expect_data("gamma")
            be = expect_data("beta")
            eps = expect_data("eps")[0]
            layers.append(LayerNorm(g, be, eps))
        elif kind == "softmax":
            layers.append(SoftMax())
        elif kind == "zeropad":
            layers.append(ZeroPad(int(args["width"])))
        elif kind == "sll":
            d = int(args["dim"])
            w = expect_data("w").reshape(d, d)
            b = expect_data("b")
            q = expect_data("q")
            v = expect_data("v").reshape(d, d)
            layers.append(SllResidual(w, b, q, v, active_cols=int(args["active"])))
        else:
            raise ValueError(f"unknown layer kind {kind!r}")
    return Network(layers, input_dim)


def save_network(net: Network, path) -> None:
    Path(path).write_text(network_to_text(net))


def load_network(path) -> Network:
    return network_from_text(Path(path).read_text())
