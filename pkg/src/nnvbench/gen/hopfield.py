"""Hopfield-network suite: 80 instances over 40 unrolled recurrent nets.

Each network stores the all-ones pattern with Hebbian weights (state matrix
of ones, identity input matrix, zero bias) and runs t steps of
y <- act(U y + V x), unrolled to a feedforward stack. The first d/2-1 inputs
are nondeterministic in [-1, 1], the rest are fixed to one.

Case 0 asserts the extreme-propagation bounds f(x0-) <= y <= f(x0+)
entrywise (safe by the monotone-propagation argument, revalidated by
simulation because binary32 SoftSign/TanH are not exactly monotone).
Case 1 asserts exact recall y >= 1, which holds only where the activation
saturates to 1.0f for the worst-case corner; elsewhere the corner itself is
the counterexample. This reproduces the published 46 safe / 34 unsafe split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from nnvbench import harness as H
from nnvbench.model import Activation, ActivationKind, Dense, Network
from nnvbench.model.tensor import Tensor
from nnvbench.oracle.search import sample_box

CATEGORY = "hopfield_networks"

WIDTHS = (4, 8, 16, 32, 64)
STEPS = (1, 2, 3, 4)
ACTS = (ActivationKind.SOFTSIGN, ActivationKind.TANH)

VALIDATION_SAMPLES = 100_000


@dataclass(frozen=True)
class HopfieldSpec:
    d: int
    t: int
    act: ActivationKind

    def __post_init__(self):
        if self.d % 2:
            raise ValueError("width must be even")


class HopfieldGenerationError(RuntimeError):
    pass


def unroll_hopfield(spec: HopfieldSpec) -> Network:
    d = spec.d
    eye = np.eye(d, dtype=np.float32)
    ones = np.ones((d, d), dtype=np.float32)
    zero = np.zeros(d, dtype=np.float32)
    layers = [Dense(eye, zero), Activation(spec.act)]  # y1 = act(V x0)
    for _ in range(spec.t - 1):
        layers.append(Dense(ones, zero))  # U = 11^T, bias 0
        layers.append(Activation(spec.act))
    return Network(layers, d)


def hopfield_name(spec: HopfieldSpec, case: int, safe: bool) -> str:
    act = "softsign" if spec.act == ActivationKind.SOFTSIGN else "tanh"
    return f"{act}_w{spec.d}_r{spec.t}_case_{case}_{'safe' if safe else 'unsafe'}"


def _inputs(d: int):
    free = d // 2 - 1
    specs = [H.box_input(-1.0, 1.0) for _ in range(free)]
    specs += [H.InputSpec(np.float32(1.0), np.float32(1.0)) for _ in range(d - free)]
    return tuple(specs), free


def _corners(d: int):
    free = d // 2 - 1
    lo = np.concatenate([np.full(free, -1.0), np.ones(d - free)]).astype(np.float32)
    hi = np.ones(d, dtype=np.float32)
    return lo, hi


def gen_hopfield(spec: HopfieldSpec, seed: int):
    """The (case 0, case 1) instance pair for one network."""
    net = unroll_hopfield(spec)
    x_lo, x_hi = _corners(spec.d)
    lo = net.eval(x_lo)
    hi = net.eval(x_hi)
    specs, free = _inputs(spec.d)

    bounds = []
    for i in range(spec.d):
        bounds.append(H.ge(H.Output(i), H.c(lo[i])))
        bounds.append(H.le(H.Output(i), H.c(hi[i])))
    case0_post = H.And(tuple(bounds))
    case1_post = H.And(tuple(H.ge(H.Output(i), H.c(1.0)) for i in range(spec.d)))

    # simulate to validate case 0 (demote with the witness if the monotone
    # propagation argument fails in binary32) and to back the case-1 verdict
    report = []
    bound_witness = None
    boxes = [(-1.0, 1.0)] * free
    done = 0
    batch = 1 << 13
    while done < VALIDATION_SAMPLES and bound_witness is None:
        m = min(batch, VALIDATION_SAMPLES - done)
        cols = sample_box(seed, boxes, m, stream=done // batch)
        full = np.concatenate([cols, np.ones((spec.d - free, m), dtype=np.float32)])
        ys = net.eval_columns(full)
        bad = (ys < lo.reshape(-1, 1)) | (ys > hi.reshape(-1, 1))
        if bad.any():
            j = int(np.nonzero(bad)[1][0])
            bound_witness = full[:, j].copy()
        done += m

    if bound_witness is None:
        case0 = H.BenchmarkInstance(
            hopfield_name(spec, 0, True), CATEGORY, "output_bounds", net,
            H.Harness(specs, case0_post),
            H.Verdict(H.VERDICT_SAFE, H.PROV_BY_CONSTRUCTION),
        )
    else:
        report.append(
            f"{hopfield_name(spec, 0, True)}: simulation found a bound violation; demoted"
        )
        case0 = H.BenchmarkInstance(
            hopfield_name(spec, 0, False), CATEGORY, "output_bounds", net,
            H.Harness(specs, case0_post),
            H.Verdict(H.VERDICT_UNSAFE, H.PROV_BY_CONSTRUCTION, Tensor(bound_witness)),
        )

    recall_safe = bool((lo >= 1.0).all())
    if recall_safe:
        case1 = H.BenchmarkInstance(
            hopfield_name(spec, 1, True), CATEGORY, "exact_recall", net,
            H.Harness(specs, case1_post),
            H.Verdict(H.VERDICT_SAFE, H.PROV_BY_CONSTRUCTION),
        )
    else:
        witness = Tensor(x_lo)
        case1 = H.BenchmarkInstance(
            hopfield_name(spec, 1, False), CATEGORY, "exact_recall", net,
            H.Harness(specs, case1_post),
            H.Verdict(H.VERDICT_UNSAFE, H.PROV_BY_CONSTRUCTION, witness),
        )
        from nnvbench.harness import replay

        if not replay(case1, witness):
            raise HopfieldGenerationError(f"{case1.name}: corner witness does not replay")
    return case0, case1, report


def gen_hopfield_suite(seed: int = 20240803):
    instances = []
    report = []
    for act in ACTS:
        for d in WIDTHS:
            for t in STEPS:
                c0, c1, rep = gen_hopfield(HopfieldSpec(d, t, act), seed)
                instances.append(c0)
                instances.append(c1)
                report.extend(rep)
    return instances, report
