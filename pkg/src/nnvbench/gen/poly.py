"""Polynomial-approximation suite: 16 trained MLPs, 96 instances.

Each ReLU MLP is trained (plain full-batch gradient descent, float64, then
frozen to float32) on 100 points of the quartic
g(x) = 0.125 x^4 - 0.25 x^3 - 0.75 x^2 + x + 0.5 sampled linearly on [-2, 3].
The worst deviation point x* = argmax |f(x) - g(x)| is found by scanning
every float32 in [-2, 3]; around it a 0.1-wide interval gets the chord
(secant) affine reference and the exact threshold eps* = max |f - chord|,
again by exhaustive scan. Six post-conditions |f(x) - chord(x)| <= eps with
eps = eps* x {0.1875, 0.375, 0.75, 1.5, 3, 6} give three unsafe (witness:
the interval argmax) and three safe (exhaustively verified) instances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from nnvbench import harness as H
from nnvbench.bits import from_bits, to_bits
from nnvbench.model import Activation, ActivationKind, Dense, Network
from nnvbench.model.tensor import Tensor

CATEGORY = "poly_approx"

G_COEFFS = (0.125, -0.25, -0.75, 1.0, 0.5)  # descending powers
X_LO, X_HI = np.float32(-2.0), np.float32(3.0)
EPS_CHAIN = (0.1875, 0.375, 0.75, 1.5, 3.0, 6.0)  # doubling, straddles eps*
HALF_WIDTH = np.float32(0.05)

# (hidden_layers+1 = L, width) grid: 16 networks, <=256 hidden neurons for L>2
ARCH_GRID = (
    (2, 4), (2, 8), (2, 16), (2, 32), (2, 64), (2, 128), (2, 256), (2, 512), (2, 1024),
    (3, 16), (3, 32), (3, 64),
    (4, 16), (4, 32),
    (5, 16), (5, 32),
)

TRAIN_POINTS = 100
TRAIN_EPOCHS = 30_000
TRAIN_LR = 2e-3
TRAIN_MSE_GATE = 0.01


@dataclass(frozen=True)
class PolySpec:
    layers: int  # L: total affine layers (hidden = L - 1)
    width: int

    def __post_init__(self):
        if not (2 <= self.layers <= 5):
            raise ValueError("L must be in 2..5")
        if self.layers > 2 and (self.layers - 1) * self.width > 256:
            raise ValueError("hidden neurons exceed 256 for deep nets")


def g_exact(x: np.ndarray) -> np.ndarray:
    """The target quartic in float64 (training reference)."""
    x = np.asarray(x, dtype=np.float64)
    acc = np.full_like(x, G_COEFFS[0])
    for coef in G_COEFFS[1:]:
        acc = acc * x + coef
    return acc


def g_f32(x: np.ndarray) -> np.ndarray:
    """The quartic evaluated in binary32 Horner form (scan reference)."""
    x = np.ascontiguousarray(x, dtype=np.float32)
    acc = np.full_like(x, np.float32(G_COEFFS[0]))
    for coef in G_COEFFS[1:]:
        acc = acc * x + np.float32(coef)
    return acc


def train_poly_mlp(spec: PolySpec, seed: int, epochs: int = TRAIN_EPOCHS,
                   lr: float = TRAIN_LR, max_retries: int = 4):
    """Full-batch gradient descent on MSE; deterministic given the seed.

    Returns (Network, final_mse). Training quality is recorded, not a
    correctness requirement: verdicts are derived from the frozen artifact.
    """
    xs = np.linspace(float(X_LO), float(X_HI), TRAIN_POINTS)
    ys = g_exact(xs)
    dims = [1] + [spec.width] * (spec.layers - 1) + [1]
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))

    def init():
        ws, bs = [], []
        for i in range(len(dims) - 1):
            fan_in = dims[i]
            ws.append(rng.normal(0.0, np.sqrt(2.0 / fan_in), size=(dims[i + 1], dims[i])))
            bs.append(np.zeros(dims[i + 1]))
        return ws, bs

    step = lr
    for _ in range(max_retries + 1):
        ws, bs = init()
        x0 = xs.reshape(1, -1)
        diverged = False
        for _ in range(epochs):
            acts = [x0]
            h = x0
            for li in range(len(ws)):
                h = ws[li] @ h + bs[li].reshape(-1, 1)
                if li < len(ws) - 1:
                    h = np.maximum(h, 0.0)
                acts.append(h)
            err = acts[-1][0] - ys
            if not np.isfinite(err).all():
                diverged = True
                break
            grad = (2.0 / TRAIN_POINTS) * err.reshape(1, -1)
            for li in range(len(ws) - 1, -1, -1):
                gw = grad @ acts[li].T
                gb = grad.sum(axis=1)
                if li > 0:
                    grad = (ws[li].T @ grad) * (acts[li] > 0)
                ws[li] = ws[li] - step * gw
                bs[li] = bs[li] - step * gb
        if not diverged:
            mse = float(np.mean(err ** 2))
            break
        step *= 0.5
    else:
        raise RuntimeError("training diverged for every retry step size")

    layers = []
    for li in range(len(ws)):
        layers.append(Dense(ws[li].astype(np.float32), bs[li].astype(np.float32)))
        if li < len(ws) - 1:
            layers.append(Activation(ActivationKind.RELU))
    return Network(layers, 1), mse


def _scan_max_abs(net: Network, lo_bits: int, hi_bits: int, reference,
                  block: int = 1 << 19):
    """Exhaustive max of |f(x) - reference(x)| over a positive-orientation
    bit range; ties resolve to the least bit pattern."""
    best = np.float32(-1.0)
    best_bits = None
    pos = lo_bits
    while pos <= hi_bits:
        m = min(block, hi_bits - pos + 1)
        bits = np.arange(pos, pos + m, dtype=np.int64).astype(np.uint32)
        x = bits.view(np.float32)
        fx = net.eval_columns(x.reshape(1, -1))[0]
        diff = np.abs(fx - reference(x))
        i = int(np.argmax(diff))  # first occurrence = least pattern in block
        if diff[i] > best:
            best = np.float32(diff[i])
            best_bits = int(bits[i])
        pos += m
    return best, best_bits


def _value_range_bits(lo: np.float32, hi: np.float32):
    """Ascending-pattern bit ranges covering [lo, hi], positives first."""
    lo_b, hi_b = to_bits(lo), to_bits(hi)
    if lo_b >= 0x80000000 and hi_b < 0x80000000:  # crosses zero
        return [(0x00000000, hi_b), (0x80000000, lo_b)]
    if lo_b >= 0x80000000:  # purely negative: hi has the smaller pattern
        return [(hi_b, lo_b)]
    return [(lo_b, hi_b)]


def scan_argmax_deviation(net: Network, reference, lo=X_LO, hi=X_HI):
    """x* and the deviation max over every float32 in [lo, hi].

    Ties break to the least bit pattern in unsigned order (positives first).
    """
    best = np.float32(-1.0)
    best_bits = None
    for lo_b, hi_b in _value_range_bits(np.float32(lo), np.float32(hi)):
        v, b = _scan_max_abs(net, lo_b, hi_b, reference)
        if v > best or (v == best and (best_bits is None or b < best_bits)):
            best, best_bits = v, b
    return from_bits(best_bits), best


def chord_of_g(a: np.float32, b: np.float32):
    """Secant of the binary32 quartic through the interval endpoints."""
    ga = g_f32(np.asarray([a]))[0]
    gb = g_f32(np.asarray([b]))[0]
    slope = np.float32(np.float32(gb - ga) / np.float32(b - a))
    intercept = np.float32(ga - np.float32(slope * a))
    return slope, intercept


def poly_thresholds(net: Network):
    """(x*, interval, chord, eps*, argmax-in-interval, eps chain)."""
    if net.input_dim != 1 or net.output_dim != 1:
        raise ValueError("poly thresholds need a scalar network")
    x_star, _ = scan_argmax_deviation(net, g_f32)
    a = np.float32(max(float(X_LO), float(np.float32(x_star - HALF_WIDTH))))
    b = np.float32(min(float(X_HI), float(np.float32(x_star + HALF_WIDTH))))
    slope, intercept = chord_of_g(a, b)

    def chord(x):
        return np.float32(slope) * x + np.float32(intercept)

    eps_star = np.float32(-1.0)
    arg_bits = None
    for lo_b, hi_b in _value_range_bits(a, b):
        v, bb = _scan_max_abs(net, lo_b, hi_b, chord)
        if v > eps_star or (v == eps_star and (arg_bits is None or bb < arg_bits)):
            eps_star, arg_bits = v, bb
    if eps_star <= 0:
        raise RuntimeError("degenerate deviation threshold")
    chain = tuple(np.float32(np.float32(k) * eps_star) for k in EPS_CHAIN)
    return x_star, (a, b), (slope, intercept), eps_star, from_bits(arg_bits), chain


def _poly_harness(a, b, slope, intercept, eps) -> H.Harness:
    approx = H.add(H.mul(H.c(slope), H.Input(0)), H.c(intercept))
    post = H.le(H.Abs(H.sub(H.Output(0), approx)), H.c(eps))
    return H.Harness((H.box_input(a, b),), post)


def gen_poly_suite(seed: int = 20240804, grid=ARCH_GRID):
    """96 instances: six eps thresholds per trained network."""
    instances = []
    report = []
    for idx, (layers, width) in enumerate(grid):
        spec = PolySpec(layers, width)
        net, mse = train_poly_mlp(spec, seed + idx)
        if mse > TRAIN_MSE_GATE:
            report.append(
                f"poly L{layers} w{width}: training MSE {mse:.4g} above gate "
                f"{TRAIN_MSE_GATE}"
            )
        x_star, (a, b), (slope, intercept), eps_star, arg_x, chain = poly_thresholds(net)
        for case, eps in enumerate(chain):
            safe = eps > eps_star  # chain straddles: cases 0-2 unsafe, 3-5 safe
            name = f"poly_l{layers}_w{width}_case_{case}_{'safe' if safe else 'unsafe'}"
            harness = _poly_harness(a, b, slope, intercept, eps)
            if safe:
                verdict = H.Verdict(H.VERDICT_SAFE, H.PROV_BRUTE_FORCE)
            else:
                verdict = H.Verdict(
                    H.VERDICT_UNSAFE, H.PROV_THRESHOLD,
                    Tensor(np.asarray([arg_x], dtype=np.float32)),
                )
            inst = H.BenchmarkInstance(
                name, CATEGORY, "approximation_error", net, harness, verdict,
            )
            if not safe:
                from nnvbench.harness import replay

                if not replay(inst, inst.verdict.witness):
                    raise RuntimeError(f"{name}: threshold witness does not replay")
            instances.append(inst)
    return instances, report
