"""Harness IR: pre-conditions, post-condition expression trees, instances.

A harness is the machine form of "x in D_in implies f(x) in D_out": per-input
interval constraints (plus an optional relational pre-condition over inputs)
and a boolean expression tree over comparisons of outputs, inputs, constants
and math-function calls. The same tree evaluates vectorized over numpy blocks
(oracle) and renders to C (emitter), so both see one semantics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from nnvbench import fmath
from nnvbench.bits import float_hex, parse_float_hex
from nnvbench.model.network import Network
from nnvbench.model.tensor import Tensor

FLT_MAX = np.float32(3.4028234663852886e38)


# --- expression nodes -------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: np.float32

    def __post_init__(self):
        object.__setattr__(self, "value", np.float32(self.value))


@dataclass(frozen=True)
class Input:
    index: int


@dataclass(frozen=True)
class Output:
    index: int


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Arith:
    op: str  # + - * /
    a: "Expr"
    b: "Expr"


@dataclass(frozen=True)
class Neg:
    a: "Expr"


@dataclass(frozen=True)
class Abs:
    a: "Expr"


@dataclass(frozen=True)
class Cmp:
    op: str  # <= < == >= > !=
    a: "Expr"
    b: "Expr"


@dataclass(frozen=True)
class And:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class Or:
    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))


@dataclass(frozen=True)
class Not:
    a: "Expr"


Expr = Union[Const, Input, Output, Call, Arith, Neg, Abs, Cmp, And, Or, Not]


def add(a, b):
    return Arith("+", a, b)


def sub(a, b):
    return Arith("-", a, b)


def mul(a, b):
    return Arith("*", a, b)


def div(a, b):
    return Arith("/", a, b)


def c(v):
    return Const(np.float32(v))


def call(fn, *args):
    return Call(fn, args)


def le(a, b):
    return Cmp("<=", a, b)


def lt(a, b):
    return Cmp("<", a, b)


def ge(a, b):
    return Cmp(">=", a, b)


def gt(a, b):
    return Cmp(">", a, b)


def eq(a, b):
    return Cmp("==", a, b)


def ne(a, b):
    return Cmp("!=", a, b)


def is_nan(a):
    return Cmp("!=", a, a)


def eval_expr(expr: Expr, inputs, outputs=None, memo=None):
    """Vectorized evaluation in strict binary32.

    inputs: list of float32 arrays (one per nondet input); outputs: optional
    (out_dim, B) float32 from the network. Arithmetic nodes are one rounded
    f32 operation each; comparisons are quiet (False on NaN).
    """
    if memo is None:
        memo = {}
    hit = memo.get(expr)
    if hit is not None:
        return hit

    if isinstance(expr, Const):
        n = inputs[0].shape[0] if inputs else 1
        r = np.full(n, expr.value, dtype=np.float32)
    elif isinstance(expr, Input):
        r = inputs[expr.index]
    elif isinstance(expr, Output):
        if outputs is None:
            raise ValueError("post-condition references outputs but none were given")
        r = outputs[expr.index]
    elif isinstance(expr, Call):
        args = [eval_expr(a, inputs, outputs, memo) for a in expr.args]
        if len(args) == 1:
            r = fmath.batch_apply(expr.fn, args[0])
        elif len(args) == 2:
            out = np.empty_like(args[0])
            fmath.kernel(expr.fn)[1](
                np.ascontiguousarray(args[0], dtype=np.float32),
                np.ascontiguousarray(args[1], dtype=np.float32),
                out,
            )
            r = out
        else:
            raise ValueError(f"unsupported arity for {expr.fn}")
    elif isinstance(expr, Arith):
        a = eval_expr(expr.a, inputs, outputs, memo)
        b = eval_expr(expr.b, inputs, outputs, memo)
        with np.errstate(all="ignore"):
            if expr.op == "+":
                r = a + b
            elif expr.op == "-":
                r = a - b
            elif expr.op == "*":
                r = a * b
            elif expr.op == "/":
                r = a / b
            else:
                raise ValueError(f"bad op {expr.op}")
    elif isinstance(expr, Neg):
        r = -eval_expr(expr.a, inputs, outputs, memo)
    elif isinstance(expr, Abs):
        r = np.abs(eval_expr(expr.a, inputs, outputs, memo))
    elif isinstance(expr, Cmp):
        a = eval_expr(expr.a, inputs, outputs, memo)
        b = eval_expr(expr.b, inputs, outputs, memo)
        with np.errstate(invalid="ignore"):
            if expr.op == "<=":
                r = a <= b
            elif expr.op == "<":
                r = a < b
            elif expr.op == "==":
                r = a == b
            elif expr.op == ">=":
                r = a >= b
            elif expr.op == ">":
                r = a > b
            elif expr.op == "!=":
                r = a != b
            else:
                raise ValueError(f"bad cmp {expr.op}")
    elif isinstance(expr, And):
        r = eval_expr(expr.items[0], inputs, outputs, memo)
        for item in expr.items[1:]:
            r = r & eval_expr(item, inputs, outputs, memo)
    elif isinstance(expr, Or):
        r = eval_expr(expr.items[0], inputs, outputs, memo)
        for item in expr.items[1:]:
            r = r | eval_expr(item, inputs, outputs, memo)
    elif isinstance(expr, Not):
        r = ~eval_expr(expr.a, inputs, outputs, memo)
    else:
        raise TypeError(f"unknown expr node {expr!r}")

    memo[expr] = r
    return r


# --- pre-conditions ---------------------------------------------------------


@dataclass(frozen=True)
class InputSpec:
    """One nondet input with optional interval bounds.

    None means unbounded on that side. NaN is admitted only when there is no
    bound at all (comparisons are quiet, so any bound excludes NaN).
    """

    lo: Optional[np.float32] = None
    hi: Optional[np.float32] = None
    lo_strict: bool = False
    hi_strict: bool = False

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", np.float32(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", np.float32(self.hi))
        if (
            self.lo is not None
            and self.hi is not None
            and not (self.lo <= self.hi)
        ):
            raise ValueError("empty pre-condition interval")

    def mask(self, x: np.ndarray) -> np.ndarray:
        m = np.ones(x.shape, dtype=bool)
        with np.errstate(invalid="ignore"):
            if self.lo is not None:
                m &= (x > self.lo) if self.lo_strict else (x >= self.lo)
            if self.hi is not None:
                m &= (x < self.hi) if self.hi_strict else (x <= self.hi)
        return m

    @property
    def unconstrained(self) -> bool:
        return self.lo is None and self.hi is None


def finite_input() -> InputSpec:
    return InputSpec(-FLT_MAX, FLT_MAX)


def box_input(lo, hi) -> InputSpec:
    return InputSpec(np.float32(lo), np.float32(hi))


# --- harness / verdict / instance -------------------------------------------


@dataclass(frozen=True)
class Harness:
    inputs: tuple
    post: Expr
    pre_rel: Optional[Expr] = None  # relational pre-condition across inputs

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))

    def pre_mask(self, cols: list[np.ndarray]) -> np.ndarray:
        m = self.inputs[0].mask(cols[0])
        for spec, x in zip(self.inputs[1:], cols[1:]):
            m &= spec.mask(x)
        if self.pre_rel is not None:
            m &= eval_expr(self.pre_rel, cols)
        return m


VERDICT_SAFE = "safe"
VERDICT_UNSAFE = "unsafe"
VERDICT_UNCONFIRMED = "unconfirmed"

PROV_BRUTE_FORCE = "brute-force"
PROV_BY_CONSTRUCTION = "by-construction"
PROV_THRESHOLD = "threshold"
PROV_REPLAY = "replay"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    provenance: str
    witness: Optional[Tensor] = None

    def __post_init__(self):
        if self.outcome not in (VERDICT_SAFE, VERDICT_UNSAFE, VERDICT_UNCONFIRMED):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if self.provenance not in (
            PROV_BRUTE_FORCE, PROV_BY_CONSTRUCTION, PROV_THRESHOLD, PROV_REPLAY,
        ):
            raise ValueError(f"bad provenance {self.provenance!r}")
        if self.outcome == VERDICT_UNSAFE and self.witness is None:
            raise ValueError("unsafe verdicts must carry a witness")


@dataclass
class BenchmarkInstance:
    name: str
    category: str
    property_kind: str
    subject: Union[str, Network]  # function id or network
    harness: Harness
    verdict: Verdict
    paired: bool = False  # two evaluations: inputs 2d, outputs stacked 2o

    @property
    def expected_safe(self) -> bool:
        return self.verdict.outcome == VERDICT_SAFE

    def eval_post(self, cols: list[np.ndarray]) -> np.ndarray:
        """Post-condition truth over column-wise inputs (no pre filtering)."""
        outputs = None
        if isinstance(self.subject, Network):
            if self.paired:
                d = self.subject.input_dim
                x1 = np.ascontiguousarray(np.stack(cols[:d], axis=0), dtype=np.float32)
                x2 = np.ascontiguousarray(np.stack(cols[d:], axis=0), dtype=np.float32)
                outputs = np.concatenate(
                    [self.subject.eval_columns(x1), self.subject.eval_columns(x2)], axis=0
                )
            else:
                x = np.ascontiguousarray(np.stack(cols, axis=0), dtype=np.float32)
                outputs = self.subject.eval_columns(x)
        return eval_expr(self.harness.post, cols, outputs, memo={})


class PreconditionError(ValueError):
    """A replayed witness does not satisfy the instance pre-condition."""


def replay(instance: BenchmarkInstance, witness) -> bool:
    """True iff the witness satisfies the pre-condition and violates the post."""
    if isinstance(witness, Tensor):
        values = witness.data
    else:
        values = np.ascontiguousarray(witness, dtype=np.float32).reshape(-1)
    if values.size != len(instance.harness.inputs):
        raise PreconditionError(
            f"{instance.name}: witness has {values.size} values, "
            f"harness declares {len(instance.harness.inputs)} inputs"
        )
    cols = [values[i:i + 1] for i in range(values.size)]
    pre = instance.harness.pre_mask(cols)
    if not bool(pre[0]):
        raise PreconditionError(f"{instance.name}: witness violates the pre-condition")
    post = instance.eval_post(cols)
    return not bool(post[0])


# --- serialization (manifests) ----------------------------------------------


def expr_to_json(e: Expr):
    if isinstance(e, Const):
        return ["const", float_hex(e.value)]
    if isinstance(e, Input):
        return ["input", e.index]
    if isinstance(e, Output):
        return ["output", e.index]
    if isinstance(e, Call):
        return ["call", e.fn, *[expr_to_json(a) for a in e.args]]
    if isinstance(e, Arith):
        return [e.op, expr_to_json(e.a), expr_to_json(e.b)]
    if isinstance(e, Neg):
        return ["neg", expr_to_json(e.a)]
    if isinstance(e, Abs):
        return ["abs", expr_to_json(e.a)]
    if isinstance(e, Cmp):
        return ["cmp", e.op, expr_to_json(e.a), expr_to_json(e.b)]
    if isinstance(e, And):
        return ["and", *[expr_to_json(i) for i in e.items]]
    if isinstance(e, Or):
        return ["or", *[expr_to_json(i) for i in e.items]]
    if isinstance(e, Not):
        return ["not", expr_to_json(e.a)]
    raise TypeError(f"unknown expr {e!r}")


def expr_from_json(j) -> Expr:
    tag = j[0]
    if tag == "const":
        return Const(parse_float_hex(j[1]))
    if tag == "input":
        return Input(j[1])
    if tag == "output":
        return Output(j[1])
    if tag == "call":
        return Call(j[1], tuple(expr_from_json(a) for a in j[2:]))
    if tag in "+-*/":
        return Arith(tag, expr_from_json(j[1]), expr_from_json(j[2]))
    if tag == "neg":
        return Neg(expr_from_json(j[1]))
    if tag == "abs":
        return Abs(expr_from_json(j[1]))
    if tag == "cmp":
        return Cmp(j[1], expr_from_json(j[2]), expr_from_json(j[3]))
    if tag == "and":
        return And(tuple(expr_from_json(i) for i in j[1:]))
    if tag == "or":
        return Or(tuple(expr_from_json(i) for i in j[1:]))
    if tag == "not":
        return Not(expr_from_json(j[1]))
    raise ValueError(f"unknown expr tag {tag!r}")


def harness_to_json(h: Harness) -> dict:
    return {
        "inputs": [
            {
                "lo": None if s.lo is None else float_hex(s.lo),
                "hi": None if s.hi is None else float_hex(s.hi),
                "lo_strict": s.lo_strict,
                "hi_strict": s.hi_strict,
            }
            for s in h.inputs
        ],
        "post": expr_to_json(h.post),
        "pre_rel": None if h.pre_rel is None else expr_to_json(h.pre_rel),
    }


def harness_from_json(j: dict) -> Harness:
    specs = tuple(
        InputSpec(
            None if s["lo"] is None else parse_float_hex(s["lo"]),
            None if s["hi"] is None else parse_float_hex(s["hi"]),
            s["lo_strict"],
            s["hi_strict"],
        )
        for s in j["inputs"]
    )
    return Harness(
        specs,
        expr_from_json(j["post"]),
        None if j.get("pre_rel") is None else expr_from_json(j["pre_rel"]),
    )


def verdict_to_json(v: Verdict) -> dict:
    return {
        "outcome": v.outcome,
        "provenance": v.provenance,
        "witness": None if v.witness is None else [format(b, "08x") for b in v.witness.bits()],
    }


def verdict_from_json(j: dict) -> Verdict:
    w = j.get("witness")
    return Verdict(
        j["outcome"],
        j["provenance"],
        None if w is None else Tensor.from_bits([int(x, 16) for x in w]),
    )
