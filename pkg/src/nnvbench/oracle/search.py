"""Randomized and adjacency search: lower bounds and counterexamples.

All randomness comes from PCG64 raw streams keyed by explicit seeds, so every
search is bit-reproducible.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from nnvbench.bits import value_ordered_ranges
from nnvbench.harness import BenchmarkInstance, eval_expr
from nnvbench.model.network import Network


def _raw_units(seed: int, n: int, stream: int = 0) -> np.ndarray:
    """n reproducible doubles in [0, 1) from the raw PCG64 stream."""
    bg = np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(stream,)))
    raw = bg.random_raw(n)
    return (raw >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def sample_box(seed: int, boxes, n: int, stream: int = 0) -> np.ndarray:
    """(k, n) float32 samples uniform in the per-input [lo, hi] boxes."""
    k = len(boxes)
    u = _raw_units(seed, n * k, stream).reshape(k, n)
    cols = np.empty((k, n), dtype=np.float32)
    for i, (lo, hi) in enumerate(boxes):
        lo64, hi64 = float(lo), float(hi)
        cols[i] = (lo64 + u[i] * (hi64 - lo64)).astype(np.float32)
    return np.clip(cols, np.float32(lo), np.float32(hi), out=cols)


def random_search(
    net: Network,
    boxes,
    samples: int,
    seed: int,
    output_index: int = 0,
    batch: int = 1 << 16,
):
    """Sampled maximum of one network output over a box.

    Returns (y_max, x_argmax): a lower bound on the true maximum and the
    input achieving it. Deterministic given the seed.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    best_y = None
    best_x = None
    done = 0
    stream = 0
    while done < samples:
        m = min(batch, samples - done)
        cols = sample_box(seed, boxes, m, stream)
        ys = net.eval_columns(cols)[output_index]
        i = int(np.argmax(ys))
        if best_y is None or ys[i] > best_y:
            best_y = np.float32(ys[i])
            best_x = cols[:, i].copy()
        done += m
        stream += 1
    return best_y, best_x


def random_violation_search(
    instance: BenchmarkInstance,
    samples: int,
    seed: int,
    extra_points: Optional[np.ndarray] = None,
    batch: int = 1 << 14,
):
    """First sampled pre-satisfying input that violates the post, or None.

    extra_points (k, m) are tried first (box corners, constructed
    candidates); random box samples follow.
    """
    h = instance.harness
    boxes = []
    for spec in h.inputs:
        if spec.lo is None or spec.hi is None:
            raise ValueError("random search needs bounded inputs")
        boxes.append((spec.lo, spec.hi))

    def try_cols(cols):
        pre = h.pre_mask([cols[i] for i in range(cols.shape[0])])
        idx = np.nonzero(pre)[0]
        if idx.size == 0:
            return None
        sub = np.ascontiguousarray(cols[:, idx])
        post = instance.eval_post([sub[i] for i in range(sub.shape[0])])
        bad = np.nonzero(~post)[0]
        if bad.size:
            return sub[:, int(bad[0])].copy()
        return None

    if extra_points is not None and extra_points.size:
        w = try_cols(np.ascontiguousarray(extra_points, dtype=np.float32))
        if w is not None:
            return w
    done = 0
    stream = 0
    while done < samples:
        m = min(batch, samples - done)
        w = try_cols(sample_box(seed, boxes, m, stream))
        if w is not None:
            return w
        done += m
        stream += 1
    return None


def pair_counterexample_search(
    relation,
    budget: int,
    seed: int,
    lo=None,
    hi=None,
    batch: int = 1 << 18,
):
    """Search ordered pairs (x1 <= x2) for a relation violation.

    relation: bool Expr over Input(0), Input(1); a False evaluation is a
    violation. Adjacent (successor) pairs are scanned exhaustively first,
    then randomized strided pairs up to the budget. Absence of a witness
    does not prove safety.
    """
    lo_b = int(np.float32(lo).view(np.uint32)) if lo is not None else 0xFF7FFFFF
    hi_b = int(np.float32(hi).view(np.uint32)) if hi is not None else 0x7F7FFFFF

    spent = 0
    # exhaustive adjacent pairs in value order
    if lo_b >= 0x80000000 and hi_b < 0x80000000:
        ranges = [(lo_b, 0x7FFFFFFF, -1), (0, hi_b + 1, 1)]
    elif lo_b >= 0x80000000:
        ranges = [(lo_b, hi_b - 1, -1)]
    else:
        ranges = [(lo_b, hi_b + 1, 1)]
    prev = None
    for start, stop, step in ranges:
        n = abs(stop - start)
        pos = 0
        while pos < n and spent < budget:
            m = min(batch, n - pos)
            b64 = np.arange(start + step * pos, start + step * (pos + m), step, dtype=np.int64)
            x = b64.astype(np.uint32).view(np.float32)
            if prev is not None:
                x = np.concatenate(([prev], x))
            x1, x2 = x[:-1], x[1:]
            ok = eval_expr(relation, [x1, x2])
            bad = np.nonzero(~ok)[0]
            if bad.size:
                i = int(bad[0])
                return np.asarray([x1[i], x2[i]], dtype=np.float32)
            prev = x[-1]
            spent += m
            pos += m

    # randomized strided pairs
    rngu = _raw_units(seed, 0)  # noqa: F841  (stream primed per batch below)
    stream = 1000
    while spent < budget:
        m = min(batch, budget - spent)
        u = _raw_units(seed, 2 * m, stream).reshape(2, m)
        span = (hi_b - lo_b) % (1 << 32)
        # pick x1 uniformly over the pattern range, x2 at a random forward stride
        p1 = (np.floor(u[0] * (span + 1))).astype(np.int64)
        stride = (np.floor(u[1] * 4096)).astype(np.int64) + 1
        a = np.minimum(p1, span)
        b = np.minimum(a + stride, span)
        # map pattern offsets to value-ordered positions
        xs = _offset_to_float(lo_b, a)
        ys = _offset_to_float(lo_b, b)
        ok = eval_expr(relation, [xs, ys])
        bad = np.nonzero(~ok)[0]
        if bad.size:
            i = int(bad[0])
            return np.asarray([xs[i], ys[i]], dtype=np.float32)
        spent += m
        stream += 1
    return None


def _offset_to_float(lo_bits: int, offsets: np.ndarray) -> np.ndarray:
    """Value-order position -> float32, for domains crossing zero."""
    if lo_bits < 0x80000000:  # purely non-negative domain
        return (np.int64(lo_bits) + offsets).astype(np.uint32).view(np.float32)
    neg_count = lo_bits - 0x80000000 + 1
    bits = np.where(
        offsets < neg_count,
        np.int64(lo_bits) - offsets,
        offsets - neg_count,
    )
    return bits.astype(np.uint32).view(np.float32)
