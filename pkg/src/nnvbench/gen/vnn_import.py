"""Import pre-converted external benchmark assets (counterexample replay).

The two externally-derived categories (probability density, reinforcement
learning) need network weights and properties that originate in ONNX /
VNN-LIB corpora; parsing those formats is out of scope, so this importer
consumes assets already converted to this package's own formats:

    <assets>/<category>/<name>.nnv         network text format
    <assets>/<category>/<name>.json        harness + claimed verdict
    (optional) "counterexamples": [[hex bits, ...], ...] in the json

Claimed-unsafe instances are republished only if one of their
counterexamples still replays to a violation on the bit-exact evaluator
(the replay mechanism); non-replaying ones are dropped and reported.
Claimed-safe instances keep their labels with replay provenance.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from nnvbench import harness as H
from nnvbench.harness import replay
from nnvbench.model.serial import load_network
from nnvbench.model.tensor import Tensor

IMPORT_CATEGORIES = ("reach_prob_density", "reach_rl")


def import_vnn_assets(assets_dir) -> tuple[list, list]:
    assets = Path(assets_dir)
    instances = []
    report = []
    for category in IMPORT_CATEGORIES:
        cdir = assets / category
        if not cdir.is_dir():
            continue
        for meta_path in sorted(cdir.glob("*.json")):
            meta = json.loads(meta_path.read_text())
            name = meta["name"]
            net = load_network(cdir / f"{meta['network']}.nnv")
            harness = H.harness_from_json(meta["harness"])
            claimed_unsafe = not meta["claimed_safe"]
            if claimed_unsafe:
                witnesses = [
                    Tensor.from_bits([int(w, 16) for w in row])
                    for row in meta.get("counterexamples", [])
                ]
                kept = None
                for w in witnesses:
                    probe = H.BenchmarkInstance(
                        name, category, meta.get("property_kind", "imported"),
                        net, harness,
                        H.Verdict(H.VERDICT_UNSAFE, H.PROV_REPLAY, w),
                    )
                    try:
                        if replay(probe, w):
                            kept = probe
                            break
                    except H.PreconditionError:
                        continue
                if kept is None:
                    report.append(
                        f"{name}: no stored counterexample still causes a violation; dropped"
                    )
                    continue
                instances.append(kept)
            else:
                instances.append(H.BenchmarkInstance(
                    name, category, meta.get("property_kind", "imported"),
                    net, harness,
                    H.Verdict(H.VERDICT_SAFE, H.PROV_REPLAY),
                ))
    return instances, report
