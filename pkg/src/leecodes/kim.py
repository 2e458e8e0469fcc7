"""Even power sums of basis labels and the invariant Q_k.

Q_k(x) is the sum of 2k-th powers of the linear form <x, b> over the radius-2
Lee ball, computed two independent ways: by expanding the multiset directly
(`q_direct`) and by the closed form in the power sums S_2, ..., S_2k
(`q_formula`). Everything is exact integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

DEFAULT_LABEL_RANGE = (-1000, 1000)
DEFAULT_SEED = 20190218


def power_sum(x: Sequence[int], t: int) -> int:
    """S_2t(x) = sum_i x_i^(2t)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return sum(v ** (2 * t) for v in x)


def q_direct(x: Sequence[int], k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    p = 2 * k
    total = 0
    for v in x:
        total += v**p + (-v) ** p + (2 * v) ** p + (-2 * v) ** p
    n = len(x)
    for i in range(n):
        a = x[i]
        for j in range(i + 1, n):
            b = x[j]
            total += (a + b) ** p + (a - b) ** p + (-a + b) ** p + (-a - b) ** p
    return total


def q_formula(x: Sequence[int], k: int) -> int:
    """(4^k + 4n + 2) S_2k + 2 sum_{t=1}^{k-1} C(2k, 2t) S_2t S_2(k-t)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = len(x)
    S = {t: power_sum(x, t) for t in range(1, k + 1)}
    cross = sum(comb(2 * k, 2 * t) * S[t] * S[k - t] for t in range(1, k))
    return (4**k + 4 * n + 2) * S[k] + 2 * cross


def q_formula_coefficients(n: int, k: int) -> tuple[int, dict[tuple[int, int], int]]:
    """Coefficient of S_2k and of each product S_2t S_2(k-t) (t < k-t counted once)."""
    cross: dict[tuple[int, int], int] = {}
    for t in range(1, k):
        key = (min(t, k - t), max(t, k - t))
        cross[key] = cross.get(key, 0) + 2 * comb(2 * k, 2 * t)
    return 4**k + 4 * n + 2, cross


@dataclass(frozen=True)
class PowerSumProfile:
    labels: tuple[int, ...]
    sums: dict[int, int]  # t -> S_2t
    p: Optional[int] = None
    residues: Optional[dict[int, int]] = None  # t -> S_2t mod p


def power_sum_profile(x: Sequence[int], k_max: int, p: Optional[int] = None) -> PowerSumProfile:
    sums = {t: power_sum(x, t) for t in range(1, k_max + 1)}
    residues = {t: s % p for t, s in sums.items()} if p else None
    return PowerSumProfile(tuple(x), sums, p, residues)


@dataclass
class KimReport:
    n: int
    k_max: int
    trials: int
    seed: int
    label_range: tuple[int, int]
    checks: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k_max": self.k_max,
            "trials": self.trials,
            "seed": self.seed,
            "label_range": list(self.label_range),
            "checks": self.checks,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }


def random_labels(rng: random.Random, n: int, label_range=DEFAULT_LABEL_RANGE) -> list[int]:
    lo, hi = label_range
    return [rng.randint(lo, hi) for _ in range(n)]


def verify_kim_identity(
    n: int,
    k_max: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    label_range: tuple[int, int] = DEFAULT_LABEL_RANGE,
) -> KimReport:
    """Compare q_direct and q_formula on seeded random label vectors.

    Mismatches are collected in trial order, never raised.
    """
    if n < 1 or k_max < 1 or trials < 1:
        raise ValueError("n, k_max and trials must all be >= 1")
    rng = random.Random(seed)
    report = KimReport(n, k_max, trials, seed, tuple(label_range))
    for trial in range(trials):
        x = random_labels(rng, n, label_range)
        for k in range(1, k_max + 1):
            direct, closed = q_direct(x, k), q_formula(x, k)
            report.checks += 1
            if direct != closed:
                report.counterexamples.append(
                    {"trial": trial, "k": k, "labels": x, "q_direct": direct, "q_formula": closed}
                )
    return report
