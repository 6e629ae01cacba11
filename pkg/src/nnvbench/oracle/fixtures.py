"""Verdict fixture records: text lines for regression pinning.

Line form: `<property_id> <outcome> <provenance> [witness hex words]`.
"""

from __future__ import annotations

from pathlib import Path

from nnvbench.harness import Verdict, verdict_from_json, verdict_to_json


def write_fixtures(path, verdicts: dict[str, Verdict]) -> None:
    lines = []
    for name in sorted(verdicts):
        v = verdicts[name]
        j = verdict_to_json(v)
        parts = [name, j["outcome"], j["provenance"]]
        if j["witness"]:
            parts.extend(j["witness"])
        lines.append(" ".join(parts))
    Path(path).write_text("\n".join(lines) + "\n")


def load_fixtures(path) -> dict[str, Verdict]:
    out = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        parts = line.split()
        name, outcome, provenance = parts[:3]
        witness = parts[3:] or None
        out[name] = verdict_from_json(
            {"outcome": outcome, "provenance": provenance, "witness": witness}
        )
    return out
