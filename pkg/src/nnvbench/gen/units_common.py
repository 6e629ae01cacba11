"""Shared machinery for the unit suites (maths functions, activations).

Each function gets a plan: an ordered list of properties following its table
row order (the instance index inside the name encodes that order, e.g. the
softsign monotonicity slot is softsign_2). One exhaustive sweep per function
settles every single-input property; monotonicity runs its own adjacency
sweep; verdict suffixes are attached afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from nnvbench import harness as H
from nnvbench.oracle.exhaustive import (
    AdjacencyCheck,
    PostCheck,
    SymmetryCheck,
    monotonicity_check,
    sweep_function_checks,
)

FINITE = H.finite_input()


@dataclass
class Plan:
    """One property slot: harness plus how the oracle settles it."""

    property_kind: str
    harness: H.Harness
    scan: str = "post"  # post | adjacency | symmetry-even | symmetry-odd
    evaluator: Optional[Callable] = None  # adjacency subject override


def monotonicity_harness(fn: str, lo=None, hi=None, fixed_extra=None) -> H.Harness:
    """Two ordered nondet inputs x1 <= x2 asserting f(x1) <= f(x2)."""
    if lo is None and hi is None:
        spec = FINITE
    else:
        spec = H.InputSpec(
            None if lo is None else np.float32(lo),
            None if hi is None else np.float32(hi),
        )
    if fixed_extra is None:
        post = H.le(H.call(fn, H.Input(0)), H.call(fn, H.Input(1)))
    else:
        cv = H.c(fixed_extra)
        post = H.le(H.call(fn, H.Input(0), cv), H.call(fn, H.Input(1), cv))
    return H.Harness((spec, spec), post, pre_rel=H.le(H.Input(0), H.Input(1)))


def run_function_plans(fn_name, plans: list[Plan], block: int) -> list[H.Verdict]:
    """Settle all plans for one function.

    fn_name: registered unary kernel name, or None when every plan carries
    its own evaluator / self-contained post (two-argument subjects).
    """
    post_checks: list[tuple[int, PostCheck]] = []
    sym_checks: list[tuple[int, SymmetryCheck]] = []
    adjacency: list[int] = []

    for i, plan in enumerate(plans):
        inst = H.BenchmarkInstance(
            f"plan_{i}", "", plan.property_kind, fn_name or "", plan.harness,
            H.Verdict(H.VERDICT_SAFE, H.PROV_BRUTE_FORCE),
        )
        if plan.scan == "post":
            post_checks.append((i, PostCheck(inst)))
        elif plan.scan in ("symmetry-even", "symmetry-odd"):
            if fn_name is None:
                raise ValueError("symmetry pair-scan needs a registered subject")
            sym_checks.append(
                (i, SymmetryCheck(inst, fn_name, odd=plan.scan.endswith("odd")))
            )
        elif plan.scan == "adjacency":
            adjacency.append(i)
        else:
            raise ValueError(plan.scan)

    if post_checks or sym_checks:
        sweep_function_checks(
            fn_name,
            [c for _, c in post_checks],
            [c for _, c in sym_checks],
            [],
            block=block,
        )

    verdicts: list[Optional[H.Verdict]] = [None] * len(plans)
    for i, chk in post_checks:
        verdicts[i] = chk.verdict()
    for i, chk in sym_checks:
        verdicts[i] = chk.verdict()
    for i in adjacency:
        plan = plans[i]
        spec = plan.harness.inputs[0]
        verdicts[i] = monotonicity_check(
            plan.evaluator if plan.evaluator is not None else fn_name,
            spec.lo, spec.hi, block=block,
        )
    return verdicts


def named_instances(
    fn_label: str,
    category: str,
    subject: str,
    plans: list[Plan],
    verdicts: list[H.Verdict],
) -> tuple[list[H.BenchmarkInstance], list[str]]:
    """Attach names <fn>_<idx>_<verdict>; unconfirmed slots are excluded."""
    out = []
    excluded = []
    for i, (plan, v) in enumerate(zip(plans, verdicts)):
        if v is None or v.outcome == H.VERDICT_UNCONFIRMED:
            excluded.append(f"{fn_label}_{i} ({plan.property_kind}): unconfirmed")
            continue
        name = f"{fn_label}_{i}_{v.outcome}"
        out.append(
            H.BenchmarkInstance(name, category, plan.property_kind, subject, plan.harness, v)
        )
    return out, excluded
