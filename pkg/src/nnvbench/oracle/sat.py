"""Exact SAT oracle: vectorized truth tables for small n, DPLL beyond.

A CNF formula is (n, clauses) with clauses as lists of nonzero signed
variable indices (1-based; -k negates variable k).
"""

from __future__ import annotations

import numpy as np

TRUTH_TABLE_MAX_N = 25


def verify_assignment(n: int, clauses, assignment) -> bool:
    """True iff the 0/1 assignment (length n) satisfies every clause."""
    a = list(assignment)
    for clause in clauses:
        ok = False
        for lit in clause:
            v = a[abs(lit) - 1]
            if (lit > 0 and v) or (lit < 0 and not v):
                ok = True
                break
        if not ok:
            return False
    return True


def truth_table_sat(n: int, clauses):
    """Exhaustive check of all 2^n assignments; returns assignment or None."""
    if n > TRUTH_TABLE_MAX_N:
        raise ValueError(f"truth table limited to n <= {TRUTH_TABLE_MAX_N}")
    idx = np.arange(1 << n, dtype=np.uint32)
    sat = np.ones(1 << n, dtype=bool)
    for clause in clauses:
        cm = np.zeros(1 << n, dtype=bool)
        for lit in clause:
            bit = (idx >> np.uint32(abs(lit) - 1)) & np.uint32(1)
            cm |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
        sat &= cm
        if not sat.any():
            return None
    first = int(np.nonzero(sat)[0][0])
    return [(first >> k) & 1 for k in range(n)]


def dpll(n: int, clauses):
    """DPLL with unit propagation and pure-literal elimination.

    Returns a satisfying 0/1 assignment (length n, unconstrained variables 0)
    or None if unsatisfiable.
    """
    assign: dict[int, bool] = {}

    def simplify(cls, lit):
        out = []
        for clause in cls:
            if lit in clause:
                continue
            if -lit in clause:
                reduced = [l for l in clause if l != -lit]
                if not reduced:
                    return None
                out.append(reduced)
            else:
                out.append(clause)
        return out

    def solve(cls, local):
        while True:
            unit = next((clause[0] for clause in cls if len(clause) == 1), None)
            if unit is None:
                break
            local = dict(local)
            local[abs(unit)] = unit > 0
            cls = simplify(cls, unit)
            if cls is None:
                return None
        lits = {l for clause in cls for l in clause}
        for lit in list(lits):
            if -lit not in lits:
                local = dict(local)
                local[abs(lit)] = lit > 0
                cls = simplify(cls, lit)
                if cls is None:
                    return None
                lits = {l for clause in cls for l in clause}
        if not cls:
            return local
        var = abs(cls[0][0])
        for val in (True, False):
            nxt = simplify(cls, var if val else -var)
            if nxt is not None:
                found = solve(nxt, {**local, var: val})
                if found is not None:
                    return found
        return None

    model = solve([list(c) for c in clauses], assign)
    if model is None:
        return None
    return [1 if model.get(v + 1, False) else 0 for v in range(n)]


def sat_oracle(n: int, clauses):
    """Exact satisfiability: ('sat', assignment) or ('unsat', None)."""
    for clause in clauses:
        if not clause:
            return ("unsat", None)
    if n <= TRUTH_TABLE_MAX_N and (1 << n) * max(1, len(clauses)) <= (1 << 26):
        model = truth_table_sat(n, clauses)
    else:
        model = dpll(n, clauses)
    return ("sat", model) if model is not None else ("unsat", None)
