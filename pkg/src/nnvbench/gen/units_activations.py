"""Activation-function benchmark suite: 57 instances over ten activations.

Counts follow the published matrix (ELU 5, Gaussian 5, GELU 6, GLU 6,
Logistic 8, ReLU 3, SoftPlus 6, SoftSign 6, Step 4, TanH 8); indices run
through the table rows (linear bound, monotonicity, finite difference,
inverse function, symmetry). GLU is two-argument; its published instances
fix one argument so every verdict stays scan-decidable.
"""

from __future__ import annotations

import numpy as np

from nnvbench import fmath
from nnvbench import harness as H
from nnvbench.gen.units_common import (
    FINITE,
    Plan,
    monotonicity_harness,
    named_instances,
    run_function_plans,
)

CATEGORY = "activation_functions"

F = np.float32
H_STEP = F(0.00390625)  # 2^-8


def _in(lo, hi):
    return H.box_input(lo, hi)


def _x(i=0):
    return H.Input(i)


def _f(fn, *args):
    return H.call(fn, *args)


def _lb(fn, cmp_builder):
    return Plan("linear_bound", H.Harness((FINITE,), cmp_builder(_f(fn, _x()))))


def _mono(fn, lo=None, hi=None):
    return Plan("monotonicity", monotonicity_harness(fn, lo, hi), scan="adjacency")


def _fd_abs(fn, lo, hi, factor):
    step = H.sub(H.add(_x(), H.c(H_STEP)), _x())
    diff = H.Abs(H.sub(_f(fn, H.add(_x(), H.c(H_STEP))), _f(fn, _x())))
    return Plan(
        "finite_difference",
        H.Harness((_in(lo, hi),), H.le(diff, H.mul(step, H.c(factor)))),
    )


def _fd_slack(fn, lo, hi):
    diff = H.sub(_f(fn, H.add(_x(), H.c(H_STEP))), _f(fn, _x()))
    return Plan(
        "finite_difference",
        H.Harness((_in(lo, hi),), H.ge(diff, H.c(-np.float32(2.0 ** -20)))),
    )


def _sym(fn, odd):
    if odd:
        post = H.eq(_f(fn, H.Neg(_x())), H.Neg(_f(fn, _x())))
    else:
        post = H.eq(_f(fn, H.Neg(_x())), _f(fn, _x()))
    return Plan("symmetry", H.Harness((FINITE,), post),
                scan="symmetry-odd" if odd else "symmetry-even")


def _plans_elu():
    return [
        _lb("elu", lambda f: H.ge(f, H.c(-1.0))),
        _lb("elu", lambda f: H.ge(f, _x())),
        _mono("elu"),
        _fd_abs("elu", -32.0, 32.0, F(1.001)),
        _fd_slack("elu", -32.0, 32.0),
    ]


def _plans_gaussian():
    return [
        _lb("gaussian", lambda f: H.le(f, H.c(1.0))),
        _lb("gaussian", lambda f: H.ge(f, H.c(0.0))),
        _fd_abs("gaussian", -32.0, 32.0, F(0.9)),  # sup |g'| = sqrt(2/e)
        Plan("finite_difference", H.Harness(  # decreasing on positives
            (_in(0.01, 32.0),),
            H.le(_f("gaussian", H.add(_x(), H.c(H_STEP))), _f("gaussian", _x())),
        )),
        _sym("gaussian", odd=False),
    ]


def _plans_gelu():
    return [
        _lb("gelu", lambda f: H.ge(f, H.c(-0.2))),
        Plan("linear_bound", H.Harness(  # gelu(x) <= x on positives
            (_in(0.0, 3.4028235e38),), H.le(_f("gelu", _x()), _x()),
        )),
        Plan("linear_bound", H.Harness(  # gelu(x) >= x on negatives
            (_in(-3.4028235e38, 0.0),), H.ge(_f("gelu", _x()), _x()),
        )),
        _mono("gelu"),  # dips near -0.75: expected unsafe
        _fd_abs("gelu", -32.0, 32.0, F(1.2)),
        Plan("finite_difference", H.Harness(  # slope never below -0.2
            (_in(-32.0, 32.0),),
            H.ge(H.sub(_f("gelu", H.add(_x(), H.c(H_STEP))), _f("gelu", _x())),
                 H.mul(H.c(-0.2), H.c(H_STEP))),
        )),
    ]


def _glu_fixed(y):
    """Unary view of GLU with the gate input pinned to a constant."""
    yv = np.float32(y)

    def ev(xs):
        out = np.empty_like(xs)
        fmath.kernel("glu")[1](xs, np.full_like(xs, yv), out)
        return out

    return ev


def _plans_glu():
    pos_gate = F(3.0)
    neg_gate = F(-3.0)
    fixed_pos = H.InputSpec(pos_gate, pos_gate)
    fixed_neg = H.InputSpec(neg_gate, neg_gate)
    plans = [
        Plan("linear_bound", H.Harness(  # x >= 0, gate fixed: glu <= x
            (_in(0.0, 3.4028235e38), fixed_pos),
            H.le(_f("glu", _x(0), _x(1)), _x(0)),
        )),
        Plan("linear_bound", H.Harness(  # x >= 0, negative gate: glu >= 0
            (_in(0.0, 3.4028235e38), fixed_neg),
            H.ge(_f("glu", _x(0), _x(1)), H.c(0.0)),
        )),
        # monotone in the first argument for a fixed positive gate
        Plan("monotonicity", monotonicity_harness("glu", fixed_extra=pos_gate),
             scan="adjacency", evaluator=_glu_fixed(pos_gate)),
        # monotone in the gate for fixed x = 1 (glu(1, y) = logistic(y))
        Plan("monotonicity",
             H.Harness(
                 (FINITE, FINITE),
                 H.le(_f("glu", H.c(1.0), _x(0)), _f("glu", H.c(1.0), _x(1))),
                 pre_rel=H.le(_x(0), _x(1)),
             ),
             scan="adjacency", evaluator=_glu_fixed_x1()),
        Plan("symmetry", H.Harness(  # odd in x for a fixed gate
            (FINITE, fixed_pos),
            H.eq(_f("glu", H.Neg(_x(0)), _x(1)), H.Neg(_f("glu", _x(0), _x(1)))),
        )),
        Plan("symmetry", H.Harness(
            (FINITE, fixed_neg),
            H.eq(_f("glu", H.Neg(_x(0)), _x(1)), H.Neg(_f("glu", _x(0), _x(1)))),
        )),
    ]
    return plans


def _glu_fixed_x1():
    def ev(ys):
        out = np.empty_like(ys)
        fmath.kernel("glu")[1](np.full_like(ys, np.float32(1.0)), ys, out)
        return out

    return ev


def _plans_logistic():
    return [
        _lb("logistic", lambda f: H.le(f, H.c(1.0))),
        _lb("logistic", lambda f: H.ge(f, H.c(0.0))),
        _mono("logistic"),
        _fd_abs("logistic", -32.0, 32.0, F(0.26)),  # sup slope = 1/4
        _fd_slack("logistic", -32.0, 32.0),
        Plan("inverse_function", H.Harness(  # logit(logistic(x)) ~ x
            (_in(-10.0, 10.0),),
            H.le(
                H.Abs(H.sub(
                    _f("logf", H.div(_f("logistic", _x()),
                                     H.sub(H.c(1.0), _f("logistic", _x())))),
                    _x(),
                )),
                H.c(0.02),
            ),
        )),
        Plan("inverse_function", H.Harness(  # logistic(logit(y)) ~ y
            (_in(0.01, 0.99),),
            H.le(
                H.Abs(H.sub(
                    _f("logistic", _f("logf", H.div(_x(), H.sub(H.c(1.0), _x())))),
                    _x(),
                )),
                H.c(1e-4),
            ),
        )),
        Plan("symmetry", H.Harness(  # logistic(-x) == 1 - logistic(x)
            (FINITE,),
            H.eq(_f("logistic", H.Neg(_x())), H.sub(H.c(1.0), _f("logistic", _x()))),
        )),
    ]


def _plans_relu():
    return [
        _lb("relu", lambda f: H.ge(f, H.c(0.0))),
        _lb("relu", lambda f: H.ge(f, _x())),
        _mono("relu"),
    ]


def _plans_softplus():
    return [
        _lb("softplus", lambda f: H.ge(f, H.c(0.0))),
        _lb("softplus", lambda f: H.ge(f, _x())),
        Plan("linear_bound", H.Harness(  # softplus(x) <= x + log 2 + slack, x >= 0
            (_in(0.0, 3.4028235e38),),
            H.le(_f("softplus", _x()), H.add(_x(), H.c(0.6932))),
        )),
        _mono("softplus"),
        _fd_abs("softplus", -32.0, 32.0, F(1.001)),
        _fd_slack("softplus", -32.0, 32.0),
    ]


def _plans_softsign():
    return [
        _lb("softsign", lambda f: H.le(f, H.c(1.0))),
        _lb("softsign", lambda f: H.ge(f, H.c(-1.0))),
        _mono("softsign"),  # the canonical unsafe instance
        _fd_abs("softsign", -32.0, 32.0, F(1.001)),
        _fd_slack("softsign", -32.0, 32.0),
        _sym("softsign", odd=True),
    ]


def _plans_step():
    return [
        _lb("step", lambda f: H.ge(f, H.c(0.0))),
        _lb("step", lambda f: H.le(f, H.c(1.0))),
        _mono("step"),
        Plan("symmetry", H.Harness(  # step(-x) == 1 - step(x); fails at zero
            (FINITE,),
            H.eq(_f("step", H.Neg(_x())), H.sub(H.c(1.0), _f("step", _x()))),
        )),
    ]


def _plans_tanh():
    return [
        _lb("tanh", lambda f: H.le(f, H.c(1.0))),
        _lb("tanh", lambda f: H.ge(f, H.c(-1.0))),
        _mono("tanh"),
        _fd_abs("tanh", -32.0, 32.0, F(1.001)),
        _fd_slack("tanh", -32.0, 32.0),
        Plan("inverse_function", H.Harness(
            (_in(-5.0, 5.0),),
            H.le(H.Abs(H.sub(_f("atanhf", _f("tanh", _x())), _x())), H.c(1e-3)),
        )),
        Plan("inverse_function", H.Harness(
            (_in(-0.999, 0.999),),
            H.le(H.Abs(H.sub(_f("tanh", _f("atanhf", _x())), _x())), H.c(1e-4)),
        )),
        _sym("tanh", odd=True),
    ]


ACTIVATIONS = [
    ("elu", "elu", _plans_elu),
    ("gaussian", "gaussian", _plans_gaussian),
    ("gelu", "gelu", _plans_gelu),
    ("glu", "glu", _plans_glu),
    ("logistic", "logistic", _plans_logistic),
    ("relu", "relu", _plans_relu),
    ("softplus", "softplus", _plans_softplus),
    ("softsign", "softsign", _plans_softsign),
    ("step", "step", _plans_step),
    ("tanh", "tanh", _plans_tanh),
]

EXPECTED_COUNTS = {
    "elu": 5, "gaussian": 5, "gelu": 6, "glu": 6, "logistic": 8,
    "relu": 3, "softplus": 6, "softsign": 6, "step": 4, "tanh": 8,
}


def gen_activation_suite(block: int = 1 << 21, only=None):
    """57 instances with oracle-settled verdicts, plus an exclusion report."""
    instances = []
    report = []
    for label, fn, mk in ACTIVATIONS:
        if only is not None and label not in only:
            continue
        plans = mk()
        if len(plans) != EXPECTED_COUNTS[label]:
            raise AssertionError(f"{label}: plan count {len(plans)}")
        subject = None if label == "glu" else fn
        verdicts = run_function_plans(subject, plans, block)
        named, excluded = named_instances(label, CATEGORY, fn, plans, verdicts)
        instances.extend(named)
        report.extend(excluded)
    return instances, report
