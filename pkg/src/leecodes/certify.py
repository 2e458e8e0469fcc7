"""Congruence certificates ruling out linear PL(n, 2) codes, and density counts.

For a perfect labeling Z^n -> G of the radius-2 ball, |G| = 2n^2 + 2n + 1. If
a prime p divides |G| exactly once, projecting G onto Z_p hits every residue
exactly m = |G|/p times, so every Q_k computed on the induced labels equals
m * sum_{t in Z_p} t^(2k) modulo p. For p = 5 and n = 8, 13, 18, 23 (mod 25)
the k = 1 and k = 2 congruences contradict each other.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .groups import is_prime
from .kim import q_formula_coefficients

THEOREM_PRIME = 5
THEOREM_MODULUS = 25
THEOREM_RESIDUES = frozenset({8, 13, 18, 23})
SCAN_PRIME_BOUND = 101
SCAN_GRID_LIMIT = 10**7

SOUNDNESS_NOTE = (
    "power sums S_2t are treated as free unknowns over Z_p; a refuted residue has no "
    "solution for any S, so in particular none for realizable S (sound, possibly incomplete)"
)


def ball2_size(n: int) -> int:
    return 2 * n * n + 2 * n + 1


def even_power_residue_sum(p: int, k: int) -> int:
    """sum_{t=0}^{p-1} t^(2k) mod p."""
    return sum(pow(t, 2 * k, p) for t in range(p)) % p


class Reason(str, Enum):
    P_DOES_NOT_DIVIDE_BALL = "P_DOES_NOT_DIVIDE_BALL"
    P2_DIVIDES_BALL = "P2_DIVIDES_BALL"
    CONGRUENCES_CONSISTENT = "CONGRUENCES_CONSISTENT"
    CONTRADICTION = "CONTRADICTION"


@dataclass(frozen=True)
class NotApplicable:
    n: int
    p: int
    reason: Reason

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "not_applicable": self.reason.value}


@dataclass(frozen=True)
class NonexistenceCertificate:
    n: int
    p: int
    modulus: int
    ball_size: int
    ball_size_mod_p2: int
    m_mod_p: int
    coeff_q1_mod_p: int
    coeff_q2_mod_p: int
    sum_t2_mod_p: int
    sum_t4_mod_p: int
    conclusion: str

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "NonexistenceCertificate":
        names = [f.name for f in fields(cls)]
        if set(d) != set(names):
            raise ValueError(f"certificate keys {sorted(d)} differ from {sorted(names)}")
        for name in names:
            want = str if name == "conclusion" else int
            if type(d[name]) is not want:
                raise ValueError(f"field {name!r} must be {want.__name__}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "NonexistenceCertificate":
        return cls.from_dict(json.loads(text))


def _conclusion(n: int, p: int, m: int, c1: int, c2: int, s2: int, s4: int) -> str:
    return (
        f"|B^{n}(2)| = 2n^2+2n+1 = {p}m with m = {m} (mod {p}), so a perfect labeling "
        f"projects onto Z_{p} hitting every residue m times. "
        f"k=1: {c1}*S_2 = m*{s2} = 0 (mod {p}) forces S_2 = 0. "
        f"k=2: {c2}*S_4 + 12*S_2^2 = m*{s4} (mod {p}) then forces m = 0 (mod {p}), "
        f"contradicting m = {m}. No linear PL({n},2) code exists."
    )


def certify_nonexistence(n: int) -> Union[NonexistenceCertificate, NotApplicable]:
    """Certificate that no linear PL(n, 2) code exists, via the prime 5.

    Returns NotApplicable (with a reason code) when the argument does not go
    through for this n.
    """
    if n < 3:
        raise ValueError(f"dimension must be >= 3, got {n}")
    p = THEOREM_PRIME
    size = ball2_size(n)
    if size % p:
        return NotApplicable(n, p, Reason.P_DOES_NOT_DIVIDE_BALL)
    r = size % (p * p)
    if r == 0:
        return NotApplicable(n, p, Reason.P2_DIVIDES_BALL)
    m = r // p
    c1, c2 = (4 * n + 6) % p, (4 * n + 18) % p
    s2, s4 = even_power_residue_sum(p, 1), even_power_residue_sum(p, 2)
    if not (c1 != 0 and c2 == 0 and s2 == 0 and s4 != 0):
        return NotApplicable(n, p, Reason.CONGRUENCES_CONSISTENT)
    return NonexistenceCertificate(
        n=n,
        p=p,
        modulus=p * p,
        ball_size=size,
        ball_size_mod_p2=r,
        m_mod_p=m,
        coeff_q1_mod_p=c1,
        coeff_q2_mod_p=c2,
        sum_t2_mod_p=s2,
        sum_t4_mod_p=s4,
        conclusion=_conclusion(n, p, m, c1, c2, s2, s4),
    )


def verify_certificate(c: NonexistenceCertificate) -> bool:
    """Recompute every field from (n, p) and check the contradiction.

    Shares nothing with certify_nonexistence except the narrative template;
    the arithmetic below is deliberately redone from scratch.
    """
    try:
        n, p = c.n, c.p
        if type(n) is not int or type(p) is not int or n < 3 or not is_prime(p):
            return False
        size = 2 * n**2 + 2 * n + 1
        cofactor, rem = divmod(size, p)
        if rem != 0 or cofactor % p == 0:
            return False
        m = cofactor % p
        c1 = (4 * n + 6) % p
        c2 = (4 * n + 18) % p
        s2 = sum(t**2 for t in range(p)) % p
        s4 = sum(t**4 for t in range(p)) % p
        expected = (
            n, p, p**2, size, size % p**2, m, c1, c2, s2, s4,
            _conclusion(n, p, m, c1, c2, s2, s4),
        )
        got = (
            c.n, c.p, c.modulus, c.ball_size, c.ball_size_mod_p2, c.m_mod_p,
            c.coeff_q1_mod_p, c.coeff_q2_mod_p, c.sum_t2_mod_p, c.sum_t4_mod_p, c.conclusion,
        )
        if any(type(a) is not type(b) or a != b for a, b in zip(expected, got)):
            return False
        # k=1 forces S_2 = 0 only if its coefficient is a unit and its right side vanishes
        if c1 == 0 or s2 != 0:
            return False
        # with S_2 = 0 and a vanishing S_4 coefficient, k=2 reads 0 = m * s4
        if c2 != 0 or (m * s4) % p == 0:
            return False
        return True
    except (AttributeError, TypeError):
        return False


def residue_classes() -> tuple[frozenset[int], int]:
    return THEOREM_RESIDUES, THEOREM_MODULUS


@dataclass
class ModulusScanReport:
    p: int
    k_set: tuple[int, ...]
    residues_refuted: frozenset[int]
    reasons: dict[int, Reason] = field(repr=False)
    soundness: str = SOUNDNESS_NOTE

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "modulus": self.p * self.p,
            "k_set": list(self.k_set),
            "residues_refuted": sorted(self.residues_refuted),
            "reasons": {str(r): reason.value for r, reason in sorted(self.reasons.items())},
            "soundness": self.soundness,
        }


def _system_satisfiable(p: int, n_mod_p: int, k_set: tuple[int, ...]) -> bool:
    """Is there (S_2, ..., S_2K, m) in Z_p^K x (Z_p \\ 0) solving every Q_k congruence?"""
    K = max(k_set)
    if p**K > SCAN_GRID_LIMIT:
        raise ValueError(f"scan grid p^{K} = {p**K} exceeds {SCAN_GRID_LIMIT}")
    # axis t-1 of the grid holds S_2t
    grids = np.meshgrid(*([np.arange(p, dtype=np.int64)] * K), indexing="ij")
    S = {t: grids[t - 1].ravel() for t in range(1, K + 1)}
    lhs = {}
    for k in k_set:
        lead, cross = q_formula_coefficients(n_mod_p, k)
        val = (lead % p) * S[k] % p
        for (a, b), coef in cross.items():
            val = (val + (coef % p) * (S[a] * S[b] % p)) % p
        lhs[k] = val
    rhs = {k: even_power_residue_sum(p, k) for k in k_set}
    for m in range(1, p):
        ok = np.ones_like(S[1], dtype=bool)
        for k in k_set:
            ok &= lhs[k] == (m * rhs[k]) % p
        if ok.any():
            return True
    return False


def scan_modulus(
    p: int, k_set: Iterable[int] = (1, 2), bound: int = SCAN_PRIME_BOUND
) -> ModulusScanReport:
    """Residues n mod p^2 for which the Q_k congruences (k in k_set) are unsatisfiable."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p > bound:
        raise ValueError(f"p = {p} exceeds the scan bound {bound}")
    k_set = tuple(sorted(set(k_set)))
    if not k_set or k_set[0] < 1:
        raise ValueError(f"k_set must be a nonempty set of positive integers, got {k_set}")
    reasons: dict[int, Reason] = {}
    cache: dict[int, bool] = {}
    for r in range(p * p):
        size = ball2_size(r)
        if size % p:
            reasons[r] = Reason.P_DOES_NOT_DIVIDE_BALL
        elif size % (p * p) == 0:
            reasons[r] = Reason.P2_DIVIDES_BALL
        else:
            # the congruence system only sees n through n mod p
            if r % p not in cache:
                cache[r % p] = _system_satisfiable(p, r % p, k_set)
            reasons[r] = Reason.CONGRUENCES_CONSISTENT if cache[r % p] else Reason.CONTRADICTION
    refuted = frozenset(r for r, why in reasons.items() if why is Reason.CONTRADICTION)
    return ModulusScanReport(p, k_set, refuted, reasons)


@dataclass(frozen=True)
class DensityReport:
    limit: int
    count: int
    ratio: Fraction
    reference_new: Fraction  # 4X/25
    reference_old: float  # X / (3 ln(X) / 2)

    def to_dict(self) -> dict:
        return {
            "limit": self.limit,
            "count": self.count,
            "ratio": float(self.ratio),
            "ratio_exact": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "reference_new_bound": float(self.reference_new),
            "reference_old_bound": self.reference_old,
        }


def density_count(limit: int) -> DensityReport:
    """Exact number of n <= limit lying in the certified residue classes."""
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    full, rest = divmod(limit, THEOREM_MODULUS)
    # every certified residue is >= 8, so n >= 3 needs no correction
    count = full * len(THEOREM_RESIDUES) + sum(1 for r in THEOREM_RESIDUES if r <= rest)
    return DensityReport(
        limit,
        count,
        Fraction(count, limit),
        Fraction(4 * limit, 25),
        old_bound(limit),
    )


def old_bound(x: int) -> float:
    return x / (3 * math.log(x) / 2)


def compare_bounds(x: int) -> tuple[int, Fraction, float]:
    """(X, 4X/25, 2X/(3 ln X)); reference values for display only."""
    if x < 3:
        raise ValueError(f"X must be >= 3, got {x}")
    return x, Fraction(4 * x, 25), old_bound(x)


def certify_range(start: int, stop: int) -> tuple[list[NonexistenceCertificate], dict[Reason, int]]:
    """Certificates for start <= n < stop, plus a tally of NotApplicable reasons."""
    certs = []
    tally: dict[Reason, int] = {}
    for n in range(start, stop):
        c = certify_nonexistence(n)
        if isinstance(c, NotApplicable):
            tally[c.reason] = tally.get(c.reason, 0) + 1
        else:
            certs.append(c)
    return certs, tally

