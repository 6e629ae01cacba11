"""Flat binary32 value carrier."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Tensor:
    """A flat float32 array plus a shape; the universal value carrier.

    data is stored 1-D and read-only; product(shape) must equal its length.
    """

    data: np.ndarray
    shape: tuple[int, ...] = field(default=())

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=np.float32).reshape(-1)
        shape = self.shape if self.shape else (arr.size,)
        if int(np.prod(shape)) != arr.size:
            raise ValueError(f"shape {shape} does not match {arr.size} values")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "shape", tuple(int(d) for d in shape))

    @property
    def size(self) -> int:
        return self.data.size

    def tolist(self) -> list[float]:
        return [float(v) for v in self.data]

    def bits(self) -> list[int]:
        return [int(b) for b in self.data.view(np.uint32)]

    @classmethod
    def from_bits(cls, bits, shape=()) -> "Tensor":
        arr = np.asarray(list(bits), dtype=np.uint32).view(np.float32)
        return cls(arr, shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.data.view(np.uint32), other.data.view(np.uint32))
        )

    def __hash__(self):
        return hash((self.shape, self.data.view(np.uint32).tobytes()))
