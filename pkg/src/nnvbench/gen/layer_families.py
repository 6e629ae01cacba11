"""Concrete per-cell designs for the neural-layer suite.

Weights are fixed small dyadic constants (exactness arguments stay valid in
binary32); randomness appears only in validation sampling. Paired properties
(monotonicity, symmetry) use custom validators that construct the second
input from the first, since independent sampling would almost never satisfy
an equality pre-condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from nnvbench import harness as H
from nnvbench.model import (
    Activation,
    ActivationKind,
    AvgPool,
    BatchNorm,
    Conv1D,
    Dense,
    LayerNorm,
    MaxPool,
    Network,
    SoftMax,
)
from nnvbench.oracle.search import _raw_units

F = np.float32


@dataclass
class InstanceSpec:
    property_kind: str
    network: Network
    harness: H.Harness
    safe: bool
    paired: bool = False
    witness_candidates: Optional[list] = None
    validator: Optional[Callable] = None


@dataclass
class Family:
    layer_label: str
    build: Callable


def _box(d, lo, hi):
    return tuple(H.box_input(lo, hi) for _ in range(d))


def _and(items):
    items = list(items)
    return items[0] if len(items) == 1 else H.And(tuple(items))


def _outputs_within(n_out, lo, hi):
    parts = []
    for i in range(n_out):
        parts.append(H.ge(H.Output(i), H.c(lo)))
        parts.append(H.le(H.Output(i), H.c(hi)))
    return _and(parts)


def _rel_ordered(d):
    return _and(H.le(H.Input(j), H.Input(d + j)) for j in range(d))


def _rel_neg(d):
    return _and(H.eq(H.Input(d + j), H.Neg(H.Input(j))) for j in range(d))


def _rel_bump(d, c):
    parts = [
        H.eq(H.Input(d + j), H.Input(j)) for j in range(d) if j != c
    ]
    parts.append(H.le(H.Input(c), H.Input(d + c)))
    return _and(parts)


def _post_outputs_ordered(n_out, slack=None):
    if slack is None:
        return _and(H.le(H.Output(i), H.Output(n_out + i)) for i in range(n_out))
    return _and(
        H.le(H.Output(i), H.add(H.Output(n_out + i), H.c(slack)))
        for i in range(n_out)
    )


def _post_outputs_odd(n_out):
    return _and(
        H.eq(H.Output(n_out + i), H.Neg(H.Output(i))) for i in range(n_out)
    )


def _sum_outputs(n_out, base=0):
    e = H.Output(base)
    for i in range(1, n_out):
        e = H.add(e, H.Output(base + i))
    return e


def _sum_sq_outputs(n_out):
    e = H.mul(H.Output(0), H.Output(0))
    for i in range(1, n_out):
        e = H.add(e, H.mul(H.Output(i), H.Output(i)))
    return e


# --- validators for paired instances -----------------------------------------


def _sample_first_half(inst, n, seed):
    d = inst.subject.input_dim
    specs = inst.harness.inputs[:d]
    u = _raw_units(seed, n * d, stream=77).reshape(d, n)
    cols = np.empty((d, n), dtype=np.float32)
    for i, s in enumerate(specs):
        lo, hi = float(s.lo), float(s.hi)
        cols[i] = (lo + u[i] * (hi - lo)).astype(np.float32)
    return cols


def _check_pairs(inst, first, second):
    full = np.concatenate([first, second], axis=0)
    cols = [np.ascontiguousarray(full[i]) for i in range(full.shape[0])]
    pre = inst.harness.pre_mask(cols)
    post = inst.eval_post(cols)
    bad = np.nonzero(pre & ~post)[0]
    if bad.size:
        from nnvbench.gen.units_layers import LayerGenerationError

        raise LayerGenerationError(
            f"{inst.name}: constructed-safe instance violated at pair "
            f"{full[:, bad[0]].tolist()}"
        )


def validator_neg_pairs(n=20000, seed=91):
    def validate(inst):
        first = _sample_first_half(inst, n, seed)
        _check_pairs(inst, first, -first)
        base = np.asarray([s.lo for s in inst.harness.inputs[: inst.subject.input_dim]],
                          dtype=np.float32).reshape(-1, 1)
        _check_pairs(inst, base, -base)
    return validate


def validator_ordered_pairs(n=20000, seed=92):
    def validate(inst):
        d = inst.subject.input_dim
        first = _sample_first_half(inst, n, seed)
        u = _raw_units(seed + 1, n * d, stream=78).reshape(d, n).astype(np.float32)
        his = np.asarray([s.hi for s in inst.harness.inputs[:d]], dtype=np.float32)
        second = np.minimum(first + u * np.float32(2.0), his.reshape(-1, 1))
        second = np.maximum(second, first)  # keep ordering exact after rounding
        _check_pairs(inst, first, second)
        _check_pairs(inst, first, first)  # equal pairs are admissible too
    return validate


def validator_bump_pairs(c, n=20000, seed=93):
    def validate(inst):
        d = inst.subject.input_dim
        first = _sample_first_half(inst, n, seed)
        u = _raw_units(seed + 2, n, stream=79).astype(np.float32)
        second = first.copy()
        hi = np.float32(inst.harness.inputs[c].hi)
        second[c] = np.minimum(first[c] + u * np.float32(4.0), hi)
        second[c] = np.maximum(second[c], first[c])
        _check_pairs(inst, first, second)
        _check_pairs(inst, first, first)
    return validate


# --- family builders ----------------------------------------------------------


def _avgpool_lb(seed):
    out = []
    safe_dims = [(4, 2, 2), (6, 3, 1), (8, 4, 2), (10, 5, 5), (9, 3, 3), (6, 2, 1)]
    for d, w, s in safe_dims:
        net = Network([AvgPool(w, s)], d)
        post = _outputs_within(net.output_dim, F(-1.001), F(1.001))
        out.append(InstanceSpec(
            "linear_bound", net, H.Harness(_box(d, -1.0, 1.0), post), safe=True,
        ))
    unsafe_dims = [(4, 2, 2), (6, 3, 1), (8, 4, 2), (10, 5, 5), (7, 3, 2)]
    for d, w, s in unsafe_dims:
        net = Network([AvgPool(w, s)], d)
        post = H.le(H.Output(0), H.c(0.999))  # wrong bound constant
        out.append(InstanceSpec(
            "linear_bound", net, H.Harness(_box(d, -1.0, 1.0), post), safe=False,
            witness_candidates=[np.ones(d, dtype=np.float32)],
        ))
    return out


def _avgpool_mono(seed):
    out = []
    d, w, s = 6, 3, 1
    net = Network([AvgPool(w, s)], d)
    o = net.output_dim
    out.append(InstanceSpec(
        "monotonicity", net,
        H.Harness(_box(2 * d, -2.0, 2.0), _post_outputs_ordered(o), _rel_ordered(d)),
        safe=True, paired=True, validator=validator_ordered_pairs(),
    ))
    net2 = Network([AvgPool(2, 2)], 4)
    o2 = net2.output_dim
    flipped = _and(H.ge(H.Output(i), H.Output(o2 + i)) for i in range(o2))
    out.append(InstanceSpec(  # direction flipped
        "monotonicity", net2,
        H.Harness(_box(8, -2.0, 2.0), flipped, _rel_ordered(4)),
        safe=False, paired=True,
        witness_candidates=[np.concatenate([np.full(4, -2.0), np.full(4, 2.0)]).astype(np.float32)],
    ))
    net3 = Network([AvgPool(3, 3)], 9)
    o3 = net3.output_dim
    strict = _and(
        H.ge(H.Output(o3 + i), H.add(H.Output(i), H.c(0.5))) for i in range(o3)
    )
    out.append(InstanceSpec(  # claims a strict gain; equal pairs refute it
        "monotonicity", net3,
        H.Harness(_box(18, -2.0, 2.0), strict, _rel_ordered(9)),
        safe=False, paired=True,
        witness_candidates=[np.zeros(18, dtype=np.float32)],
    ))
    return out


def _batchnorm_net(d, gamma, beta, mean, var):
    return Network(
        [BatchNorm(np.asarray(gamma, dtype=np.float32),
                   np.asarray(beta, dtype=np.float32),
                   np.asarray(mean, dtype=np.float32),
                   np.asarray(var, dtype=np.float32))], d)


def _batchnorm_mono(seed):
    out = []
    for d in (3, 7):
        net = _batchnorm_net(
            d, [1.5] * d, [0.25] * d, [0.5] * d, [1.0] * d,
        )
        out.append(InstanceSpec(
            "monotonicity", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_ordered(d), _rel_ordered(d)),
            safe=True, paired=True, validator=validator_ordered_pairs(),
        ))
    for d in (3, 7):
        gamma = [1.0] * d
        gamma[0] = -1.0  # negated gain
        net = _batchnorm_net(d, gamma, [0.0] * d, [0.0] * d, [1.0] * d)
        lo = np.full(d, -4.0, dtype=np.float32)
        hi = lo.copy()
        hi[0] = 4.0
        out.append(InstanceSpec(
            "monotonicity", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_ordered(d), _rel_ordered(d)),
            safe=False, paired=True,
            witness_candidates=[np.concatenate([lo, hi])],
        ))
    return out


def _batchnorm_sym(seed):
    out = []
    for d, gamma, var in (
        (2, [1.0, 2.0], [1.0, 1.0]),
        (4, [0.5] * 4, [0.25] * 4),
        (6, [1.5] * 6, [4.0] * 6),
        (8, [2.0] * 8, [1.0] * 8),
    ):
        net = _batchnorm_net(d, gamma, [0.0] * d, [0.0] * d, var)
        out.append(InstanceSpec(
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(d), _rel_neg(d)),
            safe=True, paired=True, validator=validator_neg_pairs(),
        ))
    for d, mean, beta in (
        (3, [0.5] * 3, [0.0] * 3),
        (5, [0.5] * 5, [0.0] * 5),
        (4, [0.0] * 4, [0.25] * 4),
        (7, [0.0] * 7, [0.25] * 7),
    ):
        net = _batchnorm_net(d, [1.0] * d, beta, mean, [1.0] * d)
        ones = np.ones(d, dtype=np.float32)
        out.append(InstanceSpec(  # bias/mean injection breaks oddness
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(d), _rel_neg(d)),
            safe=False, paired=True,
            witness_candidates=[np.concatenate([ones, -ones])],
        ))
    return out


def _conv_sym(seed):
    out = []
    for d, kernel, stride in ((6, [0.5, -0.25, 1.0], 1), (5, [1.5, 2.5], 2)):
        net = Network([Conv1D(np.asarray(kernel, dtype=np.float32), 0.0, stride)], d)
        o = net.output_dim
        out.append(InstanceSpec(
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(o), _rel_neg(d)),
            safe=True, paired=True, validator=validator_neg_pairs(),
        ))
    for d, kernel, stride, bias in ((6, [0.5, -0.25, 1.0], 1, 0.25), (7, [1.0, 1.0], 1, -0.5)):
        net = Network([Conv1D(np.asarray(kernel, dtype=np.float32), bias, stride)], d)
        o = net.output_dim
        zeros = np.zeros(2 * d, dtype=np.float32)
        out.append(InstanceSpec(
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(o), _rel_neg(d)),
            safe=False, paired=True, witness_candidates=[zeros],
        ))
    return out


def _conv_identity(seed):
    out = []
    for d in (5, 9):
        net = Network([Conv1D(np.asarray([1.0], dtype=np.float32), 0.0, 1)], d)
        post = _and(H.eq(H.Output(i), H.Input(i)) for i in range(d))
        out.append(InstanceSpec(
            "identity", net, H.Harness(_box(d, -8.0, 8.0), post), safe=True,
        ))
    net = Network([Conv1D(np.asarray([1.0], dtype=np.float32), 0.0009765625, 1)], 6)
    post = _and(H.eq(H.Output(i), H.Input(i)) for i in range(6))
    out.append(InstanceSpec(  # bias injection
        "identity", net, H.Harness(_box(6, -8.0, 8.0), post), safe=False,
        witness_candidates=[np.zeros(6, dtype=np.float32)],
    ))
    net = Network([Conv1D(np.asarray([0.5], dtype=np.float32), 0.0, 1)], 8)
    post = _and(H.eq(H.Output(i), H.Input(i)) for i in range(8))
    out.append(InstanceSpec(  # wrong gain
        "identity", net, H.Harness(_box(8, -8.0, 8.0), post), safe=False,
        witness_candidates=[np.ones(8, dtype=np.float32)],
    ))
    return out


def _layernorm_net(d, gamma_val=1.0):
    return Network(
        [LayerNorm(np.full(d, gamma_val, dtype=np.float32), np.zeros(d, dtype=np.float32))],
        d,
    )


def _layernorm_mono(seed):
    out = []
    slack = F(1e-3)
    for d, c, gv in ((3, 0, 1.0), (5, 2, 1.0), (8, 4, 2.0), (10, 9, 0.5)):
        net = _layernorm_net(d, gv)
        post = H.le(H.Output(c), H.add(H.Output(d + c), H.c(slack)))
        out.append(InstanceSpec(
            "monotonicity", net,
            H.Harness(_box(2 * d, -10.0, 10.0), post, _rel_bump(d, c)),
            safe=True, paired=True, validator=validator_bump_pairs(c),
        ))
    for d, c in ((4, 1), (6, 3)):
        gamma = np.ones(d, dtype=np.float32)
        gamma[c] = -1.0
        net = Network([LayerNorm(gamma, np.zeros(d, dtype=np.float32))], d)
        post = H.le(H.Output(c), H.add(H.Output(d + c), H.c(slack)))
        ramp = np.arange(d, dtype=np.float32)
        bumped = ramp.copy()
        bumped[c] += 5.0
        out.append(InstanceSpec(  # negated gain flips the slope
            "monotonicity", net,
            H.Harness(_box(2 * d, -10.0, 10.0), post, _rel_bump(d, c)),
            safe=False, paired=True,
            witness_candidates=[np.concatenate([ramp, bumped])],
        ))
    for d, c, j in ((5, 0, 3), (9, 8, 7)):
        # j sits above the mean, so the sigma growth drags y_j down
        net = _layernorm_net(d)
        post = H.le(H.Output(j), H.add(H.Output(d + j), H.c(slack)))
        ramp = (np.arange(d, dtype=np.float32) - d / 2.0).astype(np.float32)
        bumped = ramp.copy()
        bumped[c] += 6.0
        out.append(InstanceSpec(  # wrong output: y_j falls as x_c rises
            "monotonicity", net,
            H.Harness(_box(2 * d, -10.0, 10.0), post, _rel_bump(d, c)),
            safe=False, paired=True,
            witness_candidates=[np.concatenate([ramp, bumped])],
        ))
    return out


def _layernorm_outputnorm(seed):
    out = []
    for d in (4, 9):
        net = _layernorm_net(d)
        post = H.le(H.Abs(_sum_outputs(d)), H.c(0.01))
        out.append(InstanceSpec(
            "output_norm", net, H.Harness(_box(d, -10.0, 10.0), post), safe=True,
        ))
    net = _layernorm_net(6)
    post = H.eq(_sum_outputs(6), H.c(0.0))  # float sums almost never hit 0
    out.append(InstanceSpec(
        "output_norm", net, H.Harness(_box(6, -10.0, 10.0), post), safe=False,
        witness_candidates=[np.arange(6, dtype=np.float32)],
    ))
    net = _layernorm_net(5)
    post = H.le(H.Abs(H.sub(_sum_sq_outputs(5), H.c(5.0))), H.c(1e-4))
    out.append(InstanceSpec(  # eps gap: constant inputs give zero norm
        "output_norm", net, H.Harness(_box(5, -10.0, 10.0), post), safe=False,
        witness_candidates=[np.ones(5, dtype=np.float32)],
    ))
    return out


def _linear_sym(seed):
    out = []
    w1 = np.asarray([[0.5, -1.0, 0.25, 2.0],
                     [1.5, 0.5, -0.75, 0.0],
                     [-2.0, 1.0, 0.5, 0.25]], dtype=np.float32)
    w2 = np.asarray([[1.0, -0.5], [0.25, 0.75]], dtype=np.float32)
    for w in (w1, w2):
        net = Network([Dense(w, np.zeros(w.shape[0], dtype=np.float32))], w.shape[1])
        d, o = w.shape[1], w.shape[0]
        out.append(InstanceSpec(
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(o), _rel_neg(d)),
            safe=True, paired=True, validator=validator_neg_pairs(),
        ))
    for w, b in ((w1, [0.25, 0.0, 0.0]), (w2, [0.0, -0.5])):
        net = Network([Dense(w, np.asarray(b, dtype=np.float32))], w.shape[1])
        d, o = w.shape[1], w.shape[0]
        zeros = np.zeros(2 * d, dtype=np.float32)
        out.append(InstanceSpec(
            "symmetry", net,
            H.Harness(_box(2 * d, -4.0, 4.0), _post_outputs_odd(o), _rel_neg(d)),
            safe=False, paired=True, witness_candidates=[zeros],
        ))
    return out


def _linear_identity(seed):
    out = []
    for d in (2, 5, 8, 10):
        net = Network([Dense(np.eye(d, dtype=np.float32), np.zeros(d, dtype=np.float32))], d)
        post = _and(H.eq(H.Output(i), H.Input(i)) for i in range(d))
        out.append(InstanceSpec(
            "identity", net, H.Harness(_box(d, -8.0, 8.0), post), safe=True,
        ))
    muts = []
    w = np.eye(4, dtype=np.float32)
    w[[0, 1]] = w[[1, 0]]  # permuted rows
    muts.append((w, np.zeros(4, dtype=np.float32), np.arange(4, dtype=np.float32)))
    w = np.eye(6, dtype=np.float32)
    b = np.zeros(6, dtype=np.float32)
    b[0] = 2.0 ** -20  # bias injection
    muts.append((np.eye(6, dtype=np.float32), b, np.zeros(6, dtype=np.float32)))
    w = np.eye(5, dtype=np.float32)
    w[0, 1] = 2.0 ** -10  # stray coupling
    muts.append((w, np.zeros(5, dtype=np.float32),
                 np.asarray([0, 1, 0, 0, 0], dtype=np.float32)))
    muts.append((2.0 * np.eye(3, dtype=np.float32), np.zeros(3, dtype=np.float32),
                 np.ones(3, dtype=np.float32)))
    for w, b, cand in muts:
        d = w.shape[0]
        net = Network([Dense(np.asarray(w, dtype=np.float32), b)], d)
        post = _and(H.eq(H.Output(i), H.Input(i)) for i in range(d))
        out.append(InstanceSpec(
            "identity", net, H.Harness(_box(d, -8.0, 8.0), post), safe=False,
            witness_candidates=[cand],
        ))
    return out


def _maxpool_lb(seed):
    out = []
    safe_dims = [(4, 2, 2), (6, 3, 1), (8, 4, 2), (10, 5, 5), (9, 3, 3)]
    for d, w, s in safe_dims:
        net = Network([MaxPool(w, s)], d)
        post = _outputs_within(net.output_dim, F(-1.0), F(1.0))  # outputs are inputs
        out.append(InstanceSpec(
            "linear_bound", net, H.Harness(_box(d, -1.0, 1.0), post), safe=True,
        ))
    unsafe_dims = [(4, 2, 2), (6, 3, 1), (8, 4, 2), (10, 5, 5), (7, 3, 2), (6, 2, 1)]
    for d, w, s in unsafe_dims:
        net = Network([MaxPool(w, s)], d)
        post = H.le(H.Output(0), H.c(0.999))
        out.append(InstanceSpec(
            "linear_bound", net, H.Harness(_box(d, -1.0, 1.0), post), safe=False,
            witness_candidates=[np.ones(d, dtype=np.float32)],
        ))
    return out


def _maxpool_mono(seed):
    out = []
    for d, w, s in ((6, 3, 1), (8, 2, 2)):
        net = Network([MaxPool(w, s)], d)
        o = net.output_dim
        out.append(InstanceSpec(
            "monotonicity", net,
            H.Harness(_box(2 * d, -2.0, 2.0), _post_outputs_ordered(o), _rel_ordered(d)),
            safe=True, paired=True, validator=validator_ordered_pairs(),
        ))
    net = Network([MaxPool(2, 1)], 5)
    o = net.output_dim
    flipped = _and(H.ge(H.Output(i), H.Output(o + i)) for i in range(o))
    out.append(InstanceSpec(
        "monotonicity", net,
        H.Harness(_box(10, -2.0, 2.0), flipped, _rel_ordered(5)),
        safe=False, paired=True,
        witness_candidates=[np.concatenate([np.full(5, -2.0), np.full(5, 2.0)]).astype(np.float32)],
    ))
    return out


def _softmax_net(d):
    return Network([SoftMax()], d)


def _softmax_lb(seed):
    out = []
    out.append(InstanceSpec(
        "linear_bound", _softmax_net(3),
        H.Harness(_box(3, -30.0, 30.0), _and(H.ge(H.Output(i), H.c(0.0)) for i in range(3))),
        safe=True,
    ))
    for d in (5, 8):
        out.append(InstanceSpec(
            "linear_bound", _softmax_net(d),
            H.Harness(_box(d, -30.0, 30.0), _and(H.le(H.Output(i), H.c(1.0)) for i in range(d))),
            safe=True,
        ))
    hot = np.full(4, -30.0, dtype=np.float32)
    hot[0] = 30.0
    out.append(InstanceSpec(
        "linear_bound", _softmax_net(4),
        H.Harness(_box(4, -30.0, 30.0), H.le(H.Output(0), H.c(0.9))),
        safe=False, witness_candidates=[hot],
    ))
    cold = np.full(6, 30.0, dtype=np.float32)
    cold[0] = -30.0
    out.append(InstanceSpec(
        "linear_bound", _softmax_net(6),
        H.Harness(_box(6, -30.0, 30.0), H.ge(H.Output(0), H.c(0.01))),
        safe=False, witness_candidates=[cold],
    ))
    out.append(InstanceSpec(
        "linear_bound", _softmax_net(2),
        H.Harness(_box(2, -30.0, 30.0), H.le(H.Output(0), H.c(0.49999))),
        safe=False, witness_candidates=[np.zeros(2, dtype=np.float32)],
    ))
    return out


def _softmax_mono(seed):
    out = []
    slack = F(1e-5)
    for d in (3, 6):
        net = _softmax_net(d)
        post = H.le(H.Output(0), H.add(H.Output(d), H.c(slack)))
        out.append(InstanceSpec(
            "monotonicity", net,
            H.Harness(_box(2 * d, -8.0, 8.0), post, _rel_bump(d, 0)),
            safe=True, paired=True, validator=validator_bump_pairs(0),
        ))
    for d in (4, 7):
        net = _softmax_net(d)
        post = H.le(H.Output(1), H.add(H.Output(d + 1), H.c(slack)))
        base = np.zeros(d, dtype=np.float32)
        bumped = base.copy()
        bumped[0] = 5.0
        out.append(InstanceSpec(  # y_1 falls when x_0 rises
            "monotonicity", net,
            H.Harness(_box(2 * d, -8.0, 8.0), post, _rel_bump(d, 0)),
            safe=False, paired=True,
            witness_candidates=[np.concatenate([base, bumped])],
        ))
    return out


def _softmax_outputnorm(seed):
    out = []
    for d in (4, 7):
        post = H.le(H.Abs(H.sub(_sum_outputs(d), H.c(1.0))), H.c(1e-3))
        out.append(InstanceSpec(
            "output_norm", _softmax_net(d),
            H.Harness(_box(d, -8.0, 8.0), post), safe=True,
        ))
    for d in (5, 9):
        post = H.eq(_sum_outputs(d), H.c(1.0))  # exact sum: float says no
        out.append(InstanceSpec(
            "output_norm", _softmax_net(d),
            H.Harness(_box(d, -8.0, 8.0), post), safe=False,
            witness_candidates=[(np.arange(d) * 0.37 - 1.1).astype(np.float32)],
        ))
    return out


FAMILIES = [
    Family("avgpool", _avgpool_lb),
    Family("avgpool", _avgpool_mono),
    Family("batchnorm", _batchnorm_mono),
    Family("batchnorm", _batchnorm_sym),
    Family("conv1d", _conv_sym),
    Family("conv1d", _conv_identity),
    Family("layernorm", _layernorm_mono),
    Family("layernorm", _layernorm_outputnorm),
    Family("linear", _linear_sym),
    Family("linear", _linear_identity),
    Family("maxpool", _maxpool_lb),
    Family("maxpool", _maxpool_mono),
    Family("softmax", _softmax_lb),
    Family("softmax", _softmax_mono),
    Family("softmax", _softmax_outputnorm),
]
