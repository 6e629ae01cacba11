"""Operational-model bundles: none, musl, core-math.

A bundle maps libm function names to vendored C source files plus their
internal dependencies, in amalgamation order. `none` relies on <math.h>.
The core-math bundle declares the functions that library provides (no
sqrtf, sinf, cosf); its sources are not shipped here and must be dropped
into the bundle directory by the user, so emission refuses with a clear
diagnostic until then.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

# source name -> (filename, internal deps), amalgamated depth-first
_MUSL_SOURCES = {
    "_prelude": (),
    "_prelude_d": (),
    "scalbnf": (),
    "expf": ("scalbnf",),
    "expm1f": (),
    "logf": (),
    "log1pf": (),
    "tanhf": ("expm1f",),
    "fabsf": (),
    "fmaxf": (),
    "erff": ("expf", "fabsf"),
    "sqrtf": (),
    "sqrt": ("_prelude_d",),
    "scalbn": ("_prelude_d",),
    "floor": (),
    "rem_pio2f": ("scalbn", "floor"),
    "sincosf_kernels": (),
    "sinf": ("rem_pio2f", "sincosf_kernels"),
    "cosf": ("rem_pio2f", "sincosf_kernels"),
    "acosf": ("sqrtf",),
    "asinf": ("sqrt", "fabsf"),
    "atanhf": ("log1pf",),
}

MUSL_PROVIDES = frozenset({
    "acosf", "asinf", "atanhf", "cosf", "erff", "expf", "expm1f",
    "fabsf", "fmaxf", "log1pf", "logf", "sinf", "sqrtf", "tanhf",
})

# per the library: no sqrtf; sinf/cosf rely on 128-bit arithmetic and are
# excluded from the bundled subset. fabsf/fmaxf are trivial bit ops kept in
# every bundle.
CORE_MATH_PROVIDES = frozenset({
    "acosf", "asinf", "atanhf", "erff", "expf", "expm1f",
    "fabsf", "fmaxf", "log1pf", "logf", "tanhf",
})


@dataclass(frozen=True)
class ModelBundle:
    name: str
    provides: frozenset
    subdir: str | None  # package data dir, None for 'none'

    def source_dir(self) -> Path | None:
        if self.subdir is None:
            return None
        return Path(resources.files("nnvbench.emit")) / "models" / self.subdir

    def has_source(self, fn: str) -> bool:
        d = self.source_dir()
        return d is not None and (d / f"{fn}.c").is_file()

    def amalgamate(self, functions) -> str:
        """Concatenated model sources covering `functions`, deps first."""
        if self.name == "none":
            return ""
        ordered: list[str] = []
        seen: set[str] = set()

        def visit(src: str):
            if src in seen:
                return
            seen.add(src)
            for dep in _MUSL_SOURCES.get(src, ()):
                visit(dep)
            ordered.append(src)

        visit("_prelude")
        for fn in sorted(functions):
            visit(fn)

        d = self.source_dir()
        parts = []
        for src in ordered:
            path = d / f"{src}.c"
            if not path.is_file():
                raise FileNotFoundError(
                    f"model bundle '{self.name}' is missing source {src}.c "
                    f"(expected at {path}); install the bundle sources to use it"
                )
            parts.append(path.read_text().rstrip() + "\n")
        return "\n".join(parts)


_BUNDLES = {
    "none": ModelBundle("none", frozenset(), None),
    "musl": ModelBundle("musl", MUSL_PROVIDES, "musl"),
    "core-math": ModelBundle("core-math", CORE_MATH_PROVIDES, "core_math"),
}


def bundle_by_name(name: str) -> ModelBundle:
    try:
        return _BUNDLES[name]
    except KeyError:
        raise ValueError(f"unknown model bundle {name!r}; choose none, musl or core-math")
