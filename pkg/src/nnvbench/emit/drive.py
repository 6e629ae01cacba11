"""Compile-and-replay driver for emitted instances.

Links an emitted C file (its main() renamed) against mock intrinsics: nondet
draws pop from a queue, assume failures and reach_error long-jump out. Each
input vector fed on stdin yields a status (0 clean, 1 reach_error, 2 assume
cut) and, for network instances, the raw nnv_net output bits. This is the
independent side of the cross-emission bit-exactness checks.
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from nnvbench.harness import BenchmarkInstance
from nnvbench.model.network import Network

CFLAGS = ["-O2", "-std=c11", "-ffp-contract=off", "-fno-builtin"]


def driver_text(instance: BenchmarkInstance) -> str:
    n_in = len(instance.harness.inputs)
    is_net = isinstance(instance.subject, Network)
    n_out = instance.subject.output_dim if is_net else 0
    if is_net and instance.paired:
        n_out *= 2
    nondet = [
        i for i, s in enumerate(instance.harness.inputs)
        if not (s.lo is not None and s.hi is not None and s.lo == s.hi
                and not s.lo_strict and not s.hi_strict)
    ]
    lines = [
        "#include <stdio.h>",
        "#include <setjmp.h>",
        "",
        "extern int nnv_instance_main(void);",
    ]
    if is_net:
        lines.append("extern void nnv_net(const float *x, float *y);")
    lines += [
        "",
        f"static float nnv_queue[{max(1, len(nondet))}];",
        "static int nnv_qpos;",
        "static jmp_buf nnv_env;",
        "",
        "float __VERIFIER_nondet_float(void) { return nnv_queue[nnv_qpos++]; }",
        "void __VERIFIER_assume(_Bool c) { if (!c) longjmp(nnv_env, 2); }",
        "void reach_error(void) { longjmp(nnv_env, 1); }",
        "",
        "int main(void) {",
        f"    unsigned int bits[{n_in}];",
        "    union { float f; unsigned int u; } cv;",
        f"    float in[{n_in}];",
    ]
    if is_net:
        lines.append(f"    float y[{n_out}];")
    fmt = " ".join(["%x"] * n_in)
    args = ", ".join(f"&bits[{i}]" for i in range(n_in))
    lines += [
        f'    while (scanf("{fmt}", {args}) == {n_in}) {{',
        f"        for (int i = 0; i < {n_in}; i++) {{ cv.u = bits[i]; in[i] = cv.f; }}",
    ]
    for qi, src in enumerate(nondet):
        lines.append(f"        nnv_queue[{qi}] = in[{src}];")
    lines += [
        "        nnv_qpos = 0;",
        "        int rc = setjmp(nnv_env);",
        "        if (rc == 0) { nnv_instance_main(); }",
        '        printf("%d", rc);',
    ]
    if is_net:
        if instance.paired:
            d = instance.subject.input_dim
            lines += [
                "        nnv_net(in, y);",
                f"        nnv_net(in + {d}, y + {n_out // 2});",
            ]
        else:
            lines.append("        nnv_net(in, y);")
        lines.append(
            f"        for (int i = 0; i < {n_out}; i++) {{ cv.f = y[i]; printf(\" %08x\", cv.u); }}"
        )
    lines += [
        '        printf("\\n");',
        "    }",
        "    return 0;",
        "}",
    ]
    return "\n".join(lines) + "\n"


@dataclass
class CompiledInstance:
    exe: Path
    n_in: int
    n_out: int


def compile_instance(
    source_text: str,
    instance: BenchmarkInstance,
    workdir,
    cc: str = "gcc",
    needs_libm: bool = False,
) -> CompiledInstance:
    workdir = Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    src = workdir / f"{instance.name}.c"
    drv = workdir / f"{instance.name}_driver.c"
    exe = workdir / f"{instance.name}.bin"
    src.write_text(source_text)
    drv.write_text(driver_text(instance))
    # the main() rename must not apply to the driver, so compile separately
    obj = workdir / f"{instance.name}.o"
    subprocess.run(
        [cc, *CFLAGS, "-Dmain=nnv_instance_main", "-c", str(src), "-o", str(obj)],
        check=True, capture_output=True,
    )
    link = [cc, *CFLAGS, str(obj), str(drv), "-o", str(exe)]
    if needs_libm:
        link.append("-lm")
    subprocess.run(link, check=True, capture_output=True)
    is_net = isinstance(instance.subject, Network)
    n_out = instance.subject.output_dim if is_net else 0
    if is_net and instance.paired:
        n_out *= 2
    return CompiledInstance(exe, len(instance.harness.inputs), n_out)


def run_compiled(ci: CompiledInstance, inputs: np.ndarray):
    """Run input vectors (B, n_in) through the binary.

    Returns (codes uint8 (B,), outputs (B, n_out) float32 or None).
    """
    inputs = np.ascontiguousarray(inputs, dtype=np.float32)
    if inputs.ndim != 2 or inputs.shape[1] != ci.n_in:
        raise ValueError(f"expected (B, {ci.n_in}) inputs")
    bits = inputs.view(np.uint32)
    text = "\n".join(" ".join(format(b, "x") for b in row) for row in bits)
    proc = subprocess.run(
        [str(ci.exe)], input=text, capture_output=True, text=True, check=True,
    )
    codes = np.empty(inputs.shape[0], dtype=np.uint8)
    outs = np.empty((inputs.shape[0], ci.n_out), dtype=np.uint32) if ci.n_out else None
    lines = proc.stdout.splitlines()
    if len(lines) != inputs.shape[0]:
        raise RuntimeError(f"driver produced {len(lines)} lines for {inputs.shape[0]} inputs")
    for i, line in enumerate(lines):
        parts = line.split()
        codes[i] = int(parts[0])
        if ci.n_out:
            outs[i] = [int(p, 16) for p in parts[1:]]
    return codes, (outs.view(np.float32) if outs is not None else None)


def expected_codes(instance: BenchmarkInstance, inputs: np.ndarray) -> np.ndarray:
    """Oracle-side status codes for the same inputs (0 clean, 1 reach, 2 cut)."""
    inputs = np.ascontiguousarray(inputs, dtype=np.float32)
    cols = [np.ascontiguousarray(inputs[:, i]) for i in range(inputs.shape[1])]
    pre = instance.harness.pre_mask(cols)
    post = instance.eval_post(cols)
    codes = np.where(pre & ~post, 1, np.where(~pre, 2, 0)).astype(np.uint8)
    return codes
