"""Lipschitz-bounded (SDP residual) suite: 18 networks, 108 instances.

Each network zero-pads k inputs to width w, applies two residual layers
x - 2 W^T D^-1 relu(W x + b) with D = diag(sum_j |W W^T|_ij q_j / q_i)
frozen in binary32, and projects to a scalar through a row-normalized
linear map. The construction has Lipschitz constant 1 in the 2-norm, so on
the box [-1.6, -1.4]^k (2-norm radius 0.1 sqrt(k) around the centroid
x_c = -1.5) the cone bounds f(x) <= f(x_c) + 0.1 sqrt(k) s, s in {1,2,4},
hold by architecture. Unsafe bounds anchor on the sampled maximum y-hat of
10M random inputs, nudged one ulp below the witness output so the stored
witness strictly violates.

Weights default to a seeded random draw (the property is architectural,
not learned); a weights file in the network text format may override them.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from nnvbench import harness as H
from nnvbench.bits import next_down
from nnvbench.model import Dense, Network, SllResidual, ZeroPad
from nnvbench.model.serial import load_network
from nnvbench.model.tensor import Tensor
from nnvbench.oracle.search import random_search

CATEGORY = "lipschitz_networks"

INPUT_COUNTS = (2, 3, 4)
WIDTHS = (4, 8, 12, 16, 20, 24)
SCALES = (1, 2, 4)
BOX_LO, BOX_HI = np.float32(-1.6), np.float32(-1.4)
CENTER = np.float32(-1.5)
RADIUS = np.float32(0.1)
SEARCH_SAMPLES = 10_000_000


@dataclass(frozen=True)
class LipschitzSpec:
    k: int
    width: int

    def __post_init__(self):
        if self.k not in INPUT_COUNTS or self.width not in WIDTHS:
            raise ValueError("spec outside the (k, width) grid")


class LipschitzGenerationError(RuntimeError):
    pass


def _draw_weights(spec: LipschitzSpec, seed: int):
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(spec.k, spec.width)))
    )
    w = spec.width

    def mat():
        a = rng.normal(0.0, 1.0 / np.sqrt(w), size=(w, w)).astype(np.float32)
        # keep magnitudes away from underflow so padded +-0 products are inert
        tiny = np.abs(a) < 2.0 ** -20
        a[tiny] = np.float32(2.0 ** -20) * np.where(a[tiny] < 0, -1, 1).astype(np.float32)
        return a

    def vec(scale):
        return (rng.uniform(-scale, scale, size=w)).astype(np.float32)

    q = rng.uniform(0.5, 2.0, size=w).astype(np.float32)
    q2 = rng.uniform(0.5, 2.0, size=w).astype(np.float32)
    proj = rng.normal(0.0, 1.0, size=w).astype(np.float32)
    return (mat(), vec(0.5), q), (mat(), vec(0.5), q2), proj


def build_sll_network(spec: LipschitzSpec, weights) -> Network:
    """Zero-pad + two residual layers + row-normalized scalar projection."""
    (w1, b1, q1), (w2, b2, q2), proj = weights
    w = spec.width
    for mat in (w1, w2):
        norms = np.sqrt((mat.astype(np.float64) ** 2).sum(axis=1))
        if (norms == 0).any():
            raise LipschitzGenerationError("zero row in W makes D singular")
    layer1 = SllResidual.build(w1, b1, q1, active_cols=spec.k)
    layer2 = SllResidual.build(w2, b2, q2)
    # normalize the projection row to unit 2-norm (computed in f64, frozen f32)
    norm = float(np.sqrt((proj.astype(np.float64) ** 2).sum()))
    if norm == 0.0:
        raise LipschitzGenerationError("zero projection row")
    pw = (proj.astype(np.float64) / norm).astype(np.float32).reshape(1, w)
    out = Dense(pw, np.zeros(1, dtype=np.float32))
    return Network([ZeroPad(w), layer1, layer2, out], spec.k)


def lipschitz_name(spec: LipschitzSpec, case: int, safe: bool) -> str:
    return (
        f"lipschitz_i{spec.k}_w{spec.width}_case_{case}_"
        f"{'safe' if safe else 'unsafe'}"
    )


def _cone_bound(fc: np.float32, k: int, s: int) -> np.float32:
    r = np.float32(RADIUS * np.float32(np.sqrt(np.float32(k))))
    return np.float32(fc + r * np.float32(s))


def gen_lipschitz_suite(seed: int = 20240805, weights_dir=None,
                        samples: int = SEARCH_SAMPLES):
    """108 instances: three cone-safe and three sampled-unsafe per network."""
    instances = []
    report = []
    for k in INPUT_COUNTS:
        for width in WIDTHS:
            spec = LipschitzSpec(k, width)
            if weights_dir is not None:
                path = Path(weights_dir) / f"lipschitz_i{k}_w{width}.nnv"
                net = load_network(path)
                if net.input_dim != k:
                    raise LipschitzGenerationError(f"{path}: wrong input count")
            else:
                net = build_sll_network(spec, _draw_weights(spec, seed))
            xc = np.full(k, CENTER, dtype=np.float32)
            fc = np.float32(net.eval(xc)[0])
            boxes = [(BOX_LO, BOX_HI)] * k
            y_hat, x_hat = random_search(net, boxes, samples, seed ^ (k * 131 + width))

            for case, s in enumerate(SCALES):
                bound = _cone_bound(fc, k, s)
                harness = H.Harness(
                    tuple(H.box_input(BOX_LO, BOX_HI) for _ in range(k)),
                    H.le(H.Output(0), H.c(bound)),
                )
                if y_hat > bound:
                    # the sampled maximum already beats the cone bound: the
                    # architecture guarantee failed, do not publish
                    raise LipschitzGenerationError(
                        f"{lipschitz_name(spec, case, True)}: sampled output "
                        f"{y_hat} exceeds the cone bound {bound}"
                    )
                instances.append(H.BenchmarkInstance(
                    lipschitz_name(spec, case, True), CATEGORY, "output_bound",
                    net, harness,
                    H.Verdict(H.VERDICT_SAFE, H.PROV_BY_CONSTRUCTION),
                ))

            if not (y_hat > fc):
                report.append(
                    f"lipschitz_i{k}_w{width}: flat sampled maximum, "
                    "unsafe family skipped"
                )
                continue
            for case, s in enumerate(SCALES):
                # bound below the witness output: f(x) <= fc + (y_hat - fc)/s,
                # then one ulp down so the witness strictly violates
                gap = np.float32(np.float32(y_hat - fc) / np.float32(s))
                bound = next_down(np.float32(fc + gap))
                while not (y_hat > bound):
                    bound = next_down(bound)
                harness = H.Harness(
                    tuple(H.box_input(BOX_LO, BOX_HI) for _ in range(k)),
                    H.le(H.Output(0), H.c(bound)),
                )
                inst = H.BenchmarkInstance(
                    lipschitz_name(spec, case + 3, False), CATEGORY, "output_bound",
                    net, harness,
                    H.Verdict(H.VERDICT_UNSAFE, H.PROV_THRESHOLD, Tensor(x_hat)),
                )
                from nnvbench.harness import replay

                if not replay(inst, inst.verdict.witness):
                    raise LipschitzGenerationError(f"{inst.name}: witness does not replay")
                instances.append(inst)
    return instances, report
