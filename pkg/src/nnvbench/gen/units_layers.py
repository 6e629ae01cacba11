"""Neural-layer benchmark suite: 86 instances, 43 safe / 43 unsafe.

Every cell of the published property matrix (AvgPool 14, BatchNorm 12,
Conv1D 8, LayerNorm 12, Linear 12, MaxPool 14, SoftMax 14) is filled with
by-construction pairs: the safe variant rests on an argument that survives
binary32 (exact identity or odd symmetry with finite weights, per-operation
monotonicity of correctly rounded ops, output elements of the input window,
or analytic bounds with slack covering worst-case rounding), and the unsafe
variant is a mutation (wrong bound constant, bias injection, negated gain,
permuted weights, or a float-impossible exactness claim) whose witness is
known, found by oracle search over corners plus random samples, and verified
by replay before publication.

Layer sizes stay small (d in [2, 10]). Monotonicity and symmetry are
two-evaluation properties: the harness carries both input vectors and the
post compares the stacked outputs.
"""

from __future__ import annotations

import numpy as np

from nnvbench import harness as H
from nnvbench.gen.layer_families import FAMILIES
from nnvbench.oracle.search import random_violation_search, sample_box

CATEGORY = "neural_layers"

VALIDATION_SAMPLES = 20_000
WITNESS_SAMPLES = 50_000


class LayerGenerationError(RuntimeError):
    pass


def _corner_points(instance) -> np.ndarray:
    """Box corners (capped) plus midpoints, as (k, m) columns."""
    specs = instance.harness.inputs
    k = len(specs)
    los = np.asarray([s.lo for s in specs], dtype=np.float32)
    his = np.asarray([s.hi for s in specs], dtype=np.float32)
    mids = ((los.astype(np.float64) + his.astype(np.float64)) / 2).astype(np.float32)
    pts = [los, his, mids]
    if k <= 12:
        for mask in range(min(1 << k, 4096)):
            pts.append(np.where(
                [(mask >> i) & 1 for i in range(k)], his, los
            ).astype(np.float32))
    return np.stack(pts, axis=1)


def _validate_safe(instance, seed: int) -> None:
    w = random_violation_search(
        instance, VALIDATION_SAMPLES, seed, extra_points=_corner_points(instance)
    )
    if w is not None:
        raise LayerGenerationError(
            f"{instance.name}: constructed-safe instance violated at {w.tolist()}"
        )


def _settle_unsafe(instance, seed: int, candidates) -> H.Verdict:
    """Witness = first violating candidate, else oracle search; abort if none."""
    from nnvbench.harness import replay
    from nnvbench.model.tensor import Tensor

    pts = None
    if candidates is not None and len(candidates):
        pts = np.ascontiguousarray(np.stack(candidates, axis=1), dtype=np.float32)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
    extra = _corner_points(instance)
    if pts is not None:
        extra = np.concatenate([pts, extra], axis=1)
    w = random_violation_search(instance, WITNESS_SAMPLES, seed, extra_points=extra)
    if w is None:
        raise LayerGenerationError(
            f"{instance.name}: mutation produced no witness within budget"
        )
    witness = Tensor(np.asarray(w, dtype=np.float32))
    verdict = H.Verdict(H.VERDICT_UNSAFE, H.PROV_BY_CONSTRUCTION, witness)
    probe = H.BenchmarkInstance(
        instance.name, instance.category, instance.property_kind,
        instance.subject, instance.harness, verdict, paired=instance.paired,
    )
    if not replay(probe, witness):
        raise LayerGenerationError(f"{instance.name}: witness does not replay")
    return verdict


def gen_layer_suite(seed: int = 20240801):
    """86 instances (43 safe / 43 unsafe) with validated verdicts."""
    instances = []
    counts = {}
    for family in FAMILIES:
        label = family.layer_label
        idx = counts.get(label, 0)
        for spec in family.build(seed):
            name = f"{label}_{idx}_{'safe' if spec.safe else 'unsafe'}"
            inst = H.BenchmarkInstance(
                name, CATEGORY, spec.property_kind, spec.network, spec.harness,
                H.Verdict(H.VERDICT_SAFE, H.PROV_BY_CONSTRUCTION),
                paired=spec.paired,
            )
            sub_seed = seed ^ (hash((label, idx)) & 0x7FFFFFFF)
            if spec.safe:
                if spec.validator is not None:
                    spec.validator(inst)
                else:
                    _validate_safe(inst, sub_seed)
            else:
                inst.verdict = _settle_unsafe(inst, sub_seed, spec.witness_candidates)
            instances.append(inst)
            idx += 1
        counts[label] = idx
    safe = sum(1 for i in instances if i.expected_safe)
    if len(instances) != 86 or safe != 43:
        raise LayerGenerationError(
            f"layer suite shape {len(instances)} total / {safe} safe"
        )
    return instances, []
