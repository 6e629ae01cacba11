"""Binary32 bit-pattern utilities.

Everything in this package identifies a float by its 32-bit pattern. The
unsigned pattern order (0x00000000..0xFFFFFFFF) is the canonical tie-break
order for witnesses; the value order used by monotonicity scans enumerates
negatives by descending pattern, then both zeros, then positives ascending.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

UINT32 = np.uint32
F32 = np.float32

POS_INF_BITS = 0x7F800000
NEG_INF_BITS = 0xFF800000
MAX_FINITE_BITS = 0x7F7FFFFF  # +FLT_MAX
NEG_MAX_FINITE_BITS = 0xFF7FFFFF  # -FLT_MAX
NEG_ZERO_BITS = 0x80000000


def to_bits(x) -> int:
    """Bit pattern of a float32 value as a Python int."""
    return int(np.float32(x).view(np.uint32))


def from_bits(b) -> np.float32:
    """float32 value of a 32-bit pattern."""
    return np.uint32(b).view(np.float32)


def arr_to_bits(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.float32).view(np.uint32)


def arr_from_bits(b: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(b, dtype=np.uint32).view(np.float32)


def is_nan_bits(b: int) -> bool:
    return (b & 0x7FFFFFFF) > POS_INF_BITS


def next_up(x) -> np.float32:
    """Smallest float32 strictly greater than x (x finite, not +max)."""
    b = to_bits(x)
    if b == NEG_ZERO_BITS:  # -0.0 -> +smallest subnormal
        return from_bits(1)
    if b >> 31:  # negative: decrement magnitude
        return from_bits(b - 1)
    return from_bits(b + 1)


def next_down(x) -> np.float32:
    b = to_bits(x)
    if b == 0:  # +0.0 -> -smallest subnormal
        return from_bits(NEG_ZERO_BITS | 1)
    if b >> 31:
        return from_bits(b + 1)
    return from_bits(b - 1)


def float_hex(x) -> str:
    """Exact bit pattern as 8 hex digits (serialization form)."""
    return format(to_bits(x), "08x")


def parse_float_hex(s: str) -> np.float32:
    return from_bits(int(s, 16))


def c_literal(x) -> str:
    """Exact C99 hexadecimal-float literal with 'f' suffix.

    inf/nan never appear in generated weights; harness constants are finite.
    """
    v = np.float32(x)
    b = to_bits(v)
    if (b & 0x7FFFFFFF) >= POS_INF_BITS:
        raise ValueError(f"non-finite constant cannot be emitted: bits={b:08x}")
    if v == 0.0:
        return "-0x0p+0f" if b >> 31 else "0x0p+0f"
    # float32 values convert to Python float exactly; float.hex() is exact.
    h = float(v).hex()
    return h + "f"


def value_ordered_ranges() -> list[tuple[int, int, int]]:
    """Bit-pattern ranges covering all finite floats in ascending value order.

    Returns (start, stop, step) triples for np.arange: negatives descending
    from -FLT_MAX to -0.0, then +0.0 ascending to +FLT_MAX.
    """
    return [
        (NEG_MAX_FINITE_BITS, NEG_ZERO_BITS - 1, -1),  # 0xFF7FFFFF .. 0x80000000
        (0x00000000, MAX_FINITE_BITS + 1, 1),  # 0x00000000 .. 0x7F7FFFFF
    ]


def iter_value_ordered_blocks(block: int = 1 << 22) -> Iterator[np.ndarray]:
    """Yield contiguous float32 blocks covering all finite floats in value order."""
    for start, stop, step in value_ordered_ranges():
        n = abs(stop - start)
        pos = 0
        while pos < n:
            m = min(block, n - pos)
            a = np.arange(start + step * pos, start + step * (pos + m), step, dtype=np.int64)
            yield a.astype(np.uint32).view(np.float32)
            pos += m


def iter_pattern_blocks(block: int = 1 << 22) -> Iterator[np.ndarray]:
    """Yield float32 blocks covering all 2^32 bit patterns in unsigned order."""
    total = 1 << 32
    pos = 0
    while pos < total:
        m = min(block, total - pos)
        a = np.arange(pos, pos + m, dtype=np.int64)
        yield a.astype(np.uint32).view(np.float32)
        pos += m
