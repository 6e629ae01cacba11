"""SV-COMP/BenchExec metadata and output-tree emission.

Layout: <out>/<category>/<name>.c + <name>.yml, <out>/<category>.set,
<out>/properties/unreach-call.prp. Each .yml records the source file, the
32-bit data model, the property path, and the expected verdict.
"""

from __future__ import annotations

from pathlib import Path

from nnvbench.emit.codegen import emit_instance

PRP_TEXT = "CHECK( init(main()), LTL(G ! call(reach_error())) )\n"


def yml_text(name: str, expected_safe: bool) -> str:
    return (
        "format_version: '2.0'\n"
        f"input_files: '{name}.c'\n"
        "properties:\n"
        "  - property_file: ../properties/unreach-call.prp\n"
        f"    expected_verdict: {'true' if expected_safe else 'false'}\n"
        "options:\n"
        "  language: C\n"
        "  data_model: ILP32\n"
    )


def emit_svcomp_metadata(out_dir, instances_by_category: dict) -> None:
    """Write .yml per instance, .set per category, and the .prp file."""
    out = Path(out_dir)
    seen: set[str] = set()
    for category, instances in instances_by_category.items():
        for inst in instances:
            if inst.name in seen:
                raise ValueError(f"duplicate instance name {inst.name!r}")
            seen.add(inst.name)
    (out / "properties").mkdir(parents=True, exist_ok=True)
    (out / "properties" / "unreach-call.prp").write_text(PRP_TEXT)
    for category in sorted(instances_by_category):
        cdir = out / category
        cdir.mkdir(parents=True, exist_ok=True)
        for inst in instances_by_category[category]:
            (cdir / f"{inst.name}.yml").write_text(yml_text(inst.name, inst.expected_safe))
        (out / f"{category}.set").write_text(f"{category}/*.yml\n")


def emit_corpus_tree(out_dir, instances_by_category: dict, models: str = "none") -> list[Path]:
    """Emit every instance as C plus all metadata; returns written .c paths."""
    out = Path(out_dir)
    emit_svcomp_metadata(out, instances_by_category)
    written = []
    for category in sorted(instances_by_category):
        cdir = out / category
        cdir.mkdir(parents=True, exist_ok=True)
        for inst in instances_by_category[category]:
            path = cdir / f"{inst.name}.c"
            path.write_text(emit_instance(inst, models=models))
            written.append(path)
    return written
