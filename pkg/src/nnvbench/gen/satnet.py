"""SAT-to-ReLU network encoding and the 96-instance suite.

Architecture n -> (|c| + 2n) ReLU units -> 2 outputs. The first hidden block
negates each disjunctive clause (weights -1/+1/0, bias 1 minus the number of
negated literals); the second stacks the binarisation gadget x - relu(2x-1).
Outputs: y1 = 1 - sum(clause units), y2 = sum(first n gadget units) - sum
(second n). The formula is satisfiable iff some x in [0,1]^n gives y1 == 1
and y2 == 0, and on binary inputs every intermediate value is a small exact
integer, so the by-construction verdict is sound in binary32.
"""

from __future__ import annotations

import numpy as np

from nnvbench import harness as H
from nnvbench.gen.cnf import CLAUSE_MULTIPLIERS, VAR_COUNTS, CnfFormula, gen_cnf_sat, gen_cnf_unsat
from nnvbench.model import Activation, ActivationKind, Dense, Network
from nnvbench.model.tensor import Tensor
from nnvbench.oracle.sat import sat_oracle, truth_table_sat, verify_assignment

CATEGORY = "sat_relu_networks"


def encode_sat_network(cnf: CnfFormula) -> Network:
    n, m = cnf.n, cnf.m
    hidden = m + 2 * n
    w1 = np.zeros((hidden, n), dtype=np.float32)
    b1 = np.zeros(hidden, dtype=np.float32)
    for i, clause in enumerate(cnf.clauses):
        negs = 0
        for lit in clause:
            if lit > 0:
                w1[i, lit - 1] = -1.0
            else:
                w1[i, -lit - 1] = 1.0
                negs += 1
        b1[i] = np.float32(1 - negs)
    # binarisation block: rows m..m+n-1 are I, rows m+n..m+2n-1 are 2I with -1
    for k in range(n):
        w1[m + k, k] = 1.0
        w1[m + n + k, k] = 2.0
        b1[m + n + k] = -1.0

    w2 = np.zeros((2, hidden), dtype=np.float32)
    b2 = np.zeros(2, dtype=np.float32)
    w2[0, :m] = -1.0
    b2[0] = 1.0
    w2[1, m:m + n] = 1.0
    w2[1, m + n:] = -1.0

    return Network([
        Dense(w1, b1),
        Activation(ActivationKind.RELU),
        Dense(w2, b2),
    ], n)


def sat_instance_name(n: int, m: int, safe: bool) -> str:
    return f"prop_bool_v{n}_c{m}_{'safe' if safe else 'unsafe'}"


def _harness(n: int) -> H.Harness:
    post = H.Not(H.And((
        H.eq(H.Output(0), H.c(1.0)),
        H.eq(H.Output(1), H.c(0.0)),
    )))
    return H.Harness(tuple(H.box_input(0.0, 1.0) for _ in range(n)), post)


def gen_sat_suite(seed: int = 20240802, var_counts=VAR_COUNTS, multipliers=CLAUSE_MULTIPLIERS,
                  oracle_check_max_n: int = 12):
    """96 instances: one satisfiable (unsafe) and one unsatisfiable (safe)
    formula per (n, r) grid point, verdicts by construction and cross-checked
    against the independent SAT oracle for small n."""
    instances = []
    report = []
    for n in var_counts:
        for r in multipliers:
            m = n * r
            cnf_sat, planted = gen_cnf_sat(n, m, seed)
            if not verify_assignment(n, cnf_sat.clauses, planted):
                raise AssertionError("planted assignment does not satisfy its formula")
            net = encode_sat_network(cnf_sat)
            witness = Tensor(np.asarray(planted, dtype=np.float32))
            inst = H.BenchmarkInstance(
                sat_instance_name(n, m, safe=False), CATEGORY, "reachability",
                net, _harness(n),
                H.Verdict(H.VERDICT_UNSAFE, H.PROV_BY_CONSTRUCTION, witness),
            )
            y = net.eval(witness.data)
            if not (y[0] == 1.0 and y[1] == 0.0):
                raise AssertionError(f"{inst.name}: planted assignment not reaching y=(1,0)")
            instances.append(inst)

            cnf_unsat = gen_cnf_unsat(n, m, seed)
            net_u = encode_sat_network(cnf_unsat)
            inst_u = H.BenchmarkInstance(
                sat_instance_name(n, m, safe=True), CATEGORY, "reachability",
                net_u, _harness(n),
                H.Verdict(H.VERDICT_SAFE, H.PROV_BY_CONSTRUCTION),
            )
            instances.append(inst_u)

            if n <= oracle_check_max_n:
                verdict, _ = sat_oracle(n, cnf_sat.clauses)
                if verdict != "sat":
                    raise AssertionError(f"oracle disagrees: {inst.name} should be sat")
                verdict_u, _ = sat_oracle(n, cnf_unsat.clauses)
                if verdict_u != "unsat":
                    raise AssertionError(f"oracle disagrees: {inst_u.name} should be unsat")
                if n <= 12:
                    tt = truth_table_sat(n, cnf_unsat.clauses)
                    if tt is not None:
                        raise AssertionError("truth table found a model for an unsat formula")
    return instances, report
