"""Maths-function benchmark suite: 58 instances over eight libm functions.

Per-function property counts follow the published matrix (cosf 8, erff 6,
expf 7, expm1f 7, logf 7, log1pf 7, sinf 8, sqrtf 8); instance indices run
through the property rows in table order (domain, linear bound,
monotonicity, periodicity, finite difference, inverse function, symmetry).
Bound constants are analytic envelopes; every verdict is settled by the
exhaustive oracle, never assumed.
"""

from __future__ import annotations

import numpy as np

from nnvbench import harness as H
from nnvbench.gen.units_common import (
    FINITE,
    Plan,
    monotonicity_harness,
    named_instances,
    run_function_plans,
)

CATEGORY = "maths_functions"

F = np.float32
H_STEP = F(0.00390625)  # 2^-8, exact
TWO_PI = F(6.2831855)  # nearest float32 to 2*pi


def _in(lo, hi):
    return H.box_input(lo, hi)


def _x(i=0):
    return H.Input(i)


def _f(fn, *args):
    return H.call(fn, *args)


def _post1(expr):
    return expr


def _abs_diff(a, b):
    return H.Abs(H.sub(a, b))


def _plan_post(kind, inputs, post):
    return Plan(kind, H.Harness(tuple(inputs), post))


def _domain_plan(fn, hi):
    # inputs below `hi` (strict) must map to NaN
    spec = H.InputSpec(hi=F(hi), hi_strict=True)
    return Plan("domain", H.Harness((spec,), H.is_nan(_f(fn, _x()))))


def _fd_step_bound(fn, lo, hi, factor):
    """|f(x+h) - f(x)| <= effective_step * factor, the fixed-offset form."""
    step = H.sub(H.add(_x(), H.c(H_STEP)), _x())
    diff = _abs_diff(_f(fn, H.add(_x(), H.c(H_STEP))), _f(fn, _x()))
    return Plan(
        "finite_difference",
        H.Harness((_in(lo, hi),), H.le(diff, H.mul(step, H.c(factor)))),
    )


def _fd_slack_nondecreasing(fn, lo, hi):
    diff = H.sub(_f(fn, H.add(_x(), H.c(H_STEP))), _f(fn, _x()))
    return Plan(
        "finite_difference",
        H.Harness((_in(lo, hi),), H.ge(diff, H.c(-np.float32(2.0 ** -20)))),
    )


def _inverse_abs(fn_outer, fn_inner, lo, hi, tol):
    post = H.le(_abs_diff(_f(fn_outer, _f(fn_inner, _x())), _x()), H.c(tol))
    return Plan("inverse_function", H.Harness((_in(lo, hi),), post))


def _inverse_rel(fn_outer, fn_inner, lo, hi, rtol):
    post = H.le(
        _abs_diff(_f(fn_outer, _f(fn_inner, _x())), _x()),
        H.mul(H.c(rtol), _x()),
    )
    return Plan("inverse_function", H.Harness((_in(lo, hi),), post))


def _sym_plan(fn, odd):
    if odd:
        post = H.eq(_f(fn, H.Neg(_x())), H.Neg(_f(fn, _x())))
    else:
        post = H.eq(_f(fn, H.Neg(_x())), _f(fn, _x()))
    return Plan("symmetry", H.Harness((FINITE,), post),
                scan="symmetry-odd" if odd else "symmetry-even")


def _periodicity_plan(fn):
    post = H.eq(_f(fn, _x()), _f(fn, H.add(_x(), H.c(TWO_PI))))
    return Plan("periodicity", H.Harness((_in(-1000.0, 1000.0),), post))


def _mono_plan(fn, lo=None, hi=None):
    return Plan("monotonicity", monotonicity_harness(fn, lo, hi), scan="adjacency")


def _plans_cosf():
    return [
        _plan_post("linear_bound", (FINITE,), H.le(_f("cosf", _x()), H.c(1.0))),
        _plan_post("linear_bound", (FINITE,), H.ge(_f("cosf", _x()), H.c(-1.0))),
        _periodicity_plan("cosf"),
        _fd_step_bound("cosf", -8.0, 8.0, F(1.0)),
        _plan_post(  # cos decreasing on (0, pi): one-sided difference sign
            "finite_difference", (_in(0.1, 2.9),),
            H.le(_f("cosf", H.add(_x(), H.c(H_STEP))), _f("cosf", _x())),
        ),
        _inverse_abs("acosf", "cosf", 0.0, 3.1415926, F(1e-3)),
        _inverse_abs("cosf", "acosf", -1.0, 1.0, F(1e-3)),
        _sym_plan("cosf", odd=False),
    ]


def _plans_erff():
    return [
        _plan_post("linear_bound", (FINITE,), H.le(_f("erff", _x()), H.c(1.0))),
        _plan_post("linear_bound", (FINITE,), H.ge(_f("erff", _x()), H.c(-1.0))),
        _mono_plan("erff"),
        _fd_step_bound("erff", -8.0, 8.0, F(1.129)),  # sup |erf'| = 2/sqrt(pi)
        _fd_slack_nondecreasing("erff", -8.0, 8.0),
        _sym_plan("erff", odd=True),
    ]


def _plans_expf():
    return [
        _plan_post(  # exp(x) >= x + 1
            "linear_bound", (FINITE,),
            H.ge(_f("expf", _x()), H.add(_x(), H.c(1.0))),
        ),
        _plan_post("linear_bound", (FINITE,), H.ge(_f("expf", _x()), H.c(0.0))),
        _mono_plan("expf"),
        Plan("finite_difference", H.Harness(  # exp(x+h) >= exp(x)*(1+0.999h)
            (_in(-87.0, 87.0),),
            H.ge(_f("expf", H.add(_x(), H.c(H_STEP))),
                 H.mul(_f("expf", _x()), H.c(F(1.0) + H_STEP * F(0.999)))),
        )),
        Plan("finite_difference", H.Harness(  # exp(x+h) <= exp(x)*(1+1.005h)
            (_in(-87.0, 87.0),),
            H.le(_f("expf", H.add(_x(), H.c(H_STEP))),
                 H.mul(_f("expf", _x()), H.c(F(1.0) + H_STEP * F(1.005)))),
        )),
        _inverse_abs("logf", "expf", -80.0, 80.0, F(1e-3)),
        _inverse_rel("expf", "logf", 1e-30, 1e30, F(1e-3)),
    ]


def _plans_expm1f():
    return [
        _plan_post("linear_bound", (FINITE,), H.ge(_f("expm1f", _x()), _x())),
        _plan_post("linear_bound", (FINITE,), H.ge(_f("expm1f", _x()), H.c(-1.0))),
        _mono_plan("expm1f"),
        _fd_slack_nondecreasing("expm1f", -87.0, 87.0),
        Plan("finite_difference", H.Harness(  # increment bounded by (f+1)*1.005h
            (_in(-87.0, 87.0),),
            H.le(H.sub(_f("expm1f", H.add(_x(), H.c(H_STEP))), _f("expm1f", _x())),
                 H.mul(H.add(_f("expm1f", _x()), H.c(1.0)), H.c(H_STEP * F(1.005)))),
        )),
        _inverse_abs("log1pf", "expm1f", -80.0, 80.0, F(1e-3)),
        _inverse_abs("expm1f", "log1pf", -0.999, 100.0, F(2e-3)),
    ]


def _plans_logf():
    return [
        _domain_plan("logf", 0.0),
        _plan_post(  # log(x) <= x - 1
            "linear_bound", (_in(0.0, 3.4028235e38),),
            H.le(_f("logf", _x()), H.sub(_x(), H.c(1.0))),
        ),
        _mono_plan("logf", lo=0.0),
        Plan("finite_difference", H.Harness(  # log(2x) - log(x) ~ ln 2
            (_in(1e-37, 1e37),),
            H.le(H.sub(_f("logf", H.mul(_x(), H.c(2.0))), _f("logf", _x())),
                 H.c(0.693149)),
        )),
        Plan("finite_difference", H.Harness(
            (_in(1e-37, 1e37),),
            H.ge(H.sub(_f("logf", H.mul(_x(), H.c(2.0))), _f("logf", _x())),
                 H.c(0.693145)),
        )),
        _inverse_rel("expf", "logf", 1e-30, 1e30, F(2e-3)),
        _inverse_abs("logf", "expf", -85.0, 85.0, F(2e-3)),
    ]


def _plans_log1pf():
    return [
        _domain_plan("log1pf", -1.0),
        _plan_post(
            "linear_bound", (_in(-1.0, 3.4028235e38),),
            H.le(_f("log1pf", _x()), _x()),
        ),
        _mono_plan("log1pf", lo=-1.0),
        _fd_step_bound("log1pf", 0.0, 1e4, F(1.0)),
        _fd_slack_nondecreasing("log1pf", 0.0, 1e4),
        _inverse_abs("expm1f", "log1pf", -0.999, 100.0, F(1e-3)),
        _inverse_abs("log1pf", "expm1f", -85.0, 85.0, F(2e-3)),
    ]


def _plans_sinf():
    return [
        _plan_post("linear_bound", (FINITE,), H.le(_f("sinf", _x()), H.c(1.0))),
        _plan_post("linear_bound", (FINITE,), H.ge(_f("sinf", _x()), H.c(-1.0))),
        _periodicity_plan("sinf"),
        _fd_step_bound("sinf", -8.0, 8.0, F(1.0)),
        _plan_post(  # sin increasing on (-pi/2, pi/2)
            "finite_difference", (_in(-1.4, 1.39),),
            H.ge(_f("sinf", H.add(_x(), H.c(H_STEP))), _f("sinf", _x())),
        ),
        _inverse_abs("asinf", "sinf", -1.5707962, 1.5707962, F(1e-3)),
        _inverse_abs("sinf", "asinf", -1.0, 1.0, F(1e-3)),
        _sym_plan("sinf", odd=True),
    ]


def _plans_sqrtf():
    return [
        _domain_plan("sqrtf", 0.0),
        _plan_post(
            "linear_bound", (_in(1.0, 3.4028235e38),),
            H.le(_f("sqrtf", _x()), _x()),
        ),
        _plan_post(
            "linear_bound", (_in(0.0, 1.0),),
            H.ge(_f("sqrtf", _x()), _x()),
        ),
        _mono_plan("sqrtf", lo=0.0),
        _fd_step_bound("sqrtf", 0.25, 1e4, F(1.0)),
        _fd_slack_nondecreasing("sqrtf", 0.0, 1e4),
        Plan("inverse_function", H.Harness(  # sqrt(x)*sqrt(x) ~ x
            (_in(1e-30, 1e30),),
            H.le(_abs_diff(H.mul(_f("sqrtf", _x()), _f("sqrtf", _x())), _x()),
                 H.mul(H.c(2.4e-7), _x())),
        )),
        Plan("inverse_function", H.Harness(  # sqrt(x*x) ~ x for positive x
            (_in(1e-15, 1e15),),
            H.le(_abs_diff(_f("sqrtf", H.mul(_x(), _x())), _x()),
                 H.mul(H.c(2.4e-7), _x())),
        )),
    ]


FUNCTIONS = [
    ("cos", "cosf", _plans_cosf),
    ("erf", "erff", _plans_erff),
    ("exp", "expf", _plans_expf),
    ("expm1", "expm1f", _plans_expm1f),
    ("log", "logf", _plans_logf),
    ("log1p", "log1pf", _plans_log1pf),
    ("sin", "sinf", _plans_sinf),
    ("sqrt", "sqrtf", _plans_sqrtf),
]

EXPECTED_COUNTS = {
    "cos": 8, "erf": 6, "exp": 7, "expm1": 7,
    "log": 7, "log1p": 7, "sin": 8, "sqrt": 8,
}


def gen_math_suite(block: int = 1 << 21, only=None):
    """58 instances with oracle-settled verdicts, plus an exclusion report."""
    instances = []
    report = []
    for label, fn, mk in FUNCTIONS:
        if only is not None and label not in only:
            continue
        plans = mk()
        if len(plans) != EXPECTED_COUNTS[label]:
            raise AssertionError(f"{label}: plan count {len(plans)}")
        verdicts = run_function_plans(fn, plans, block)
        named, excluded = named_instances(label, CATEGORY, fn, plans, verdicts)
        instances.extend(named)
        report.extend(excluded)
    return instances, report
