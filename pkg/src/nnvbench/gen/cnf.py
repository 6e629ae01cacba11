"""CNF formula generators: planted-satisfiable and split-unsatisfiable.

Satisfiable formulas plant an assignment first and draw random clauses
consistent with it. Unsatisfiable formulas start from (x1) and (not x1) and
repeatedly replace a random clause c with (c or x_k) and (c or not x_k) for
a variable absent from c, which preserves unsatisfiability (resolving the
two new clauses on x_k recovers c).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VAR_COUNTS = (5, 8, 13, 21, 34, 55, 89, 144)
CLAUSE_MULTIPLIERS = (1, 2, 3, 4, 5, 6)


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple  # tuple of tuples of signed 1-based literals

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            seen = set()
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"literal {lit} out of range")
                if -lit in seen:
                    raise ValueError("clause contains x and not x")
                seen.add(lit)

    @property
    def m(self) -> int:
        return len(self.clauses)


def _rng(seed: int, tag: str) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(hash(tag) & 0x7FFFFFFF,)))
    )


def gen_cnf_sat(n: int, m: int, seed: int, clause_width: int = 3) -> tuple:
    """Planted-assignment formula; returns (CnfFormula, planted assignment)."""
    if m < 1:
        raise ValueError("need at least one clause")
    rng = _rng(seed, f"sat-{n}-{m}")
    planted = [int(b) for b in rng.integers(0, 2, size=n)]
    width = min(clause_width, n)
    clauses = []
    for _ in range(m):
        vs = rng.choice(n, size=width, replace=False)
        lits = []
        for v in vs:
            positive = bool(rng.integers(0, 2))
            lits.append(int(v + 1) if positive else -int(v + 1))
        # keep the clause consistent with the planted assignment
        if not any((l > 0) == bool(planted[abs(l) - 1]) for l in lits):
            flip = int(rng.integers(0, width))
            v = abs(lits[flip]) - 1
            lits[flip] = (v + 1) if planted[v] else -(v + 1)
        clauses.append(tuple(lits))
    return CnfFormula(n, tuple(clauses)), planted


def gen_cnf_unsat(n: int, m: int, seed: int) -> CnfFormula:
    """Split-generated unsatisfiable formula with exactly m clauses."""
    if m < 2:
        raise ValueError("unsat generation needs m >= 2")
    rng = _rng(seed, f"unsat-{n}-{m}")
    clauses: list[list[int]] = [[1], [-1]]
    while len(clauses) < m:
        splittable = [i for i, c in enumerate(clauses) if len(c) < n]
        if not splittable:
            raise ValueError(f"m={m} not reachable by splitting with n={n}")
        i = int(splittable[int(rng.integers(0, len(splittable)))])
        clause = clauses[i]
        used = {abs(l) for l in clause}
        free = [v for v in range(1, n + 1) if v not in used]
        k = int(free[int(rng.integers(0, len(free)))])
        clauses[i] = clause + [k]
        clauses.append(clause + [-k])
    return CnfFormula(n, tuple(tuple(c) for c in clauses))
