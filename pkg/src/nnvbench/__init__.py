"""nnvbench: floating-point neural-network verification benchmark toolchain."""

__version__ = "0.1.0"
