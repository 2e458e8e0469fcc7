"""Lee metric on Z^n and Z_q^n, and Lee balls B^n(e) = {x in Z^n : |x|_1 <= e}."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Tuple

LeePoint = Tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 10**7


class EnumerationCapExceeded(RuntimeError):
    """Raised when a ball (or ball-based check) would exceed the enumeration cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"ball has {size} points, enumeration cap is {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class BallSpec:
    n: int
    e: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be an integer >= 1, got {self.n!r}")
        if not isinstance(self.e, int) or self.e < 0:
            raise ValueError(f"radius must be an integer >= 0, got {self.e!r}")


def _check_same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")


def lee_distance_z(x: Sequence[int], y: Sequence[int]) -> int:
    _check_same_length(x, y)
    return sum(abs(a - b) for a, b in zip(x, y))


def lee_distance_zq(x: Sequence[int], y: Sequence[int], q: int) -> int:
    """Lee distance on Z_q^n. Coordinates must already be reduced into [0, q)."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    _check_same_length(x, y)
    for c in (*x, *y):
        if not 0 <= c < q:
            raise ValueError(f"coordinate {c} not reduced modulo {q}")
    total = 0
    for a, b in zip(x, y):
        d = abs(a - b)
        total += min(d, q - d)
    return total


def ball_size(spec: BallSpec) -> int:
    """Number of points of B^n(e): sum_i 2^i C(n,i) C(e,i).

    Python integers are arbitrary precision, so the count never wraps.
    """
    n, e = spec.n, spec.e
    return sum(2**i * comb(n, i) * comb(e, i) for i in range(min(n, e) + 1))


def _ball_points(n: int, e: int):
    # lexicographic: first coordinate ascending, remaining radius passed down
    if n == 0:
        yield ()
        return
    for c in range(-e, e + 1):
        for rest in _ball_points(n - 1, e - abs(c)):
            yield (c,) + rest


def enumerate_ball(spec: BallSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> list[LeePoint]:
    """All points of B^n(e) in lexicographic order."""
    size = ball_size(spec)
    if size > cap:
        raise EnumerationCapExceeded(size, cap)
    return list(_ball_points(spec.n, spec.e))
