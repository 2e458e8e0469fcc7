"""Exhaustive search for linear perfect Lee codes via ball labelings.

A labeling is a tuple (g_1, ..., g_n) of images of the basis vectors. Two
symmetries preserve perfection: signed coordinate permutations of Z^n (they
fix the Lee ball) and automorphisms of G. Reduced mode enumerates one tuple
per orbit of their product:

* Modulo signed permutations a tuple is the same thing as a multiset of sign
  classes {g, -g}. Writing each class as its smaller element code, the orbit
  representatives are the non-decreasing tuples of class codes.
* Aut(G) commutes with negation, so it acts on those multisets; we keep a
  multiset iff it is lexicographically least among its images under Aut(G).

Every orbit therefore yields exactly one candidate. For e >= 1 we may also
drop multisets containing the zero class, a self-inverse class or a repeated
class (each forces two ball points onto one label: 0 and e_i, e_i and -e_i,
e_i and +-e_j respectively), and image sets that do not generate G.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, islice, permutations, product
from math import comb, gcd
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .groups import (
    FiniteAbelianGroup,
    GroupElement,
    LatticeHom,
    automorphisms,
    enumerate_abelian_groups,
    format_group,
    format_images,
    generated_subgroup_order,
    is_perfect_labeling,
)
from .lattice import kernel_lattice
from .lee import BallSpec, ball_size, enumerate_ball

DEFAULT_BUDGET = 10**7
NAIVE_HARD_CAP = 10**8
CROSS_CHECK_LIMIT = 50_000
CHUNK = 100_000

REDUCED_SYMMETRY = (
    "orbits of signed coordinate permutations x Aut(G); representative = lexicographically "
    "least sorted tuple of sign-class codes; pruned: zero, self-inverse and repeated sign "
    "classes, non-generating image sets"
)
NAIVE_SYMMETRY = "none (all |G|^n image tuples)"


def default_budget() -> int:
    env = os.environ.get("LEE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int, groups_done: int, examined: int):
        super().__init__(
            f"search needs {needed} more candidates, budget is {budget} "
            f"(progress: {groups_done} groups finished, {examined} candidates examined)"
        )
        self.needed = needed
        self.budget = budget
        self.groups_done = groups_done
        self.examined = examined


@dataclass
class SearchReport:
    n: int
    e: int
    mode: str
    ball_size: int
    groups_examined: list[FiniteAbelianGroup] = field(default_factory=list)
    candidates_examined: int = 0
    canonical_candidates: int = 0
    pruned: int = 0
    witnesses: list[LatticeHom] = field(default_factory=list)
    exhaustive: bool = False
    symmetry_mode: str = ""
    cross_validated: bool = False
    wall_time: float = 0.0

    @property
    def exists(self) -> bool:
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "mode": self.mode,
            "ball_size": self.ball_size,
            "groups_examined": [format_group(G) for G in self.groups_examined],
            "candidates_examined": self.candidates_examined,
            "canonical_candidates": self.canonical_candidates,
            "pruned": self.pruned,
            "witnesses": [
                {"group": format_group(h.group), "images": format_images(h.images)}
                for h in self.witnesses
            ],
            "exhaustive": self.exhaustive,
            "symmetry_mode": self.symmetry_mode,
            "cross_validated": self.cross_validated,
            "wall_time": self.wall_time,
        }


def _class_table(G: FiniteAbelianGroup) -> tuple[np.ndarray, np.ndarray]:
    """(class code of every element code, negation table)."""
    N = G.order
    neg = np.array([G.encode(G.neg(G.decode(c))) for c in range(N)], dtype=np.int64)
    return np.minimum(np.arange(N, dtype=np.int64), neg), neg


def _class_pool(G: FiniteAbelianGroup, prune: bool) -> list[int]:
    cls, neg = _class_table(G)
    reps = sorted(set(cls.tolist()))
    if prune:
        reps = [c for c in reps if neg[c] != c]  # drops 0 and elements of order 2
    return reps


def candidate_count(n: int, G: FiniteAbelianGroup, prune: bool) -> int:
    k = len(_class_pool(G, prune))
    return comb(k, n) if prune else comb(k + n - 1, n)


def _canonical_mask(rows: np.ndarray, cls: np.ndarray, auts: Sequence[np.ndarray], N: int) -> np.ndarray:
    n = rows.shape[1]
    weights = np.array([N ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    key = rows @ weights
    keep = np.ones(len(rows), dtype=bool)
    for perm in auts:
        moved = np.sort(cls[perm[rows]], axis=1)
        keep &= moved @ weights >= key
    return keep


def _canonical_rows(
    n: int, G: FiniteAbelianGroup, prune: bool
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Chunks of (all enumerated rows, canonical rows) of sign-class codes."""
    N = G.order
    if N ** n >= 2**62:
        raise ValueError(f"|G|^n = {N}^{n} too large for the packed orbit keys")
    cls, _ = _class_table(G)
    auts = [np.array(a, dtype=np.int64) for a in automorphisms(G)[1:]]
    pool = _class_pool(G, prune)
    it = combinations(pool, n) if prune else combinations_with_replacement(pool, n)
    while True:
        chunk = list(islice(it, CHUNK))
        if not chunk:
            return
        rows = np.array(chunk, dtype=np.int64).reshape(len(chunk), n)
        yield rows, rows[_canonical_mask(rows, cls, auts, N)]


def canonical_candidates(
    n: int, G: FiniteAbelianGroup, prune: bool = False
) -> Iterator[Tuple[GroupElement, ...]]:
    """One image tuple per orbit of (signed coordinate permutations) x Aut(G).

    With prune=True only orbits that can possibly be perfect for a radius
    e >= 1 are produced (see module docstring).
    """
    for _, rows in _canonical_rows(n, G, prune):
        for row in rows.tolist():
            yield tuple(G.decode(c) for c in row)


def orbit(images: Sequence[GroupElement], G: FiniteAbelianGroup) -> set[Tuple[GroupElement, ...]]:
    """Full orbit of an image tuple under signed permutations and Aut(G), by brute force."""
    n = len(images)
    out = set()
    for perm in automorphisms(G):
        moved = [G.decode(perm[G.encode(g)]) for g in images]
        for order in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                out.add(tuple(moved[i] if s == 1 else G.neg(moved[i]) for i, s in zip(order, signs)))
    return out


class _BallLabeler:
    """Vectorized perfect-labeling test for many image tuples at once."""

    def __init__(self, n: int, e: int, G: FiniteAbelianGroup):
        self.ball = np.array(enumerate_ball(BallSpec(n, e)), dtype=np.int64).reshape(-1, n)
        self.G = G
        self.radix = []
        r = 1
        for d in reversed(G.invariant_factors):
            self.radix.append(r)
            r *= d
        self.radix.reverse()

    def perfect(self, images: np.ndarray) -> np.ndarray:
        """images: (M, n, rank) residues. Returns a boolean mask of perfect rows."""
        codes = np.zeros((len(self.ball), len(images)), dtype=np.int64)
        for j, d in enumerate(self.G.invariant_factors):
            codes += (self.ball @ images[:, :, j].T % d) * self.radix[j]
        codes.sort(axis=0)
        return np.all(np.diff(codes, axis=0) != 0, axis=0)


def _generates(G: FiniteAbelianGroup, images: Sequence[GroupElement]) -> bool:
    if G.is_cyclic:
        return G.order == 1 or gcd(G.order, *(g[0] for g in images)) == 1
    return generated_subgroup_order(G, images) == G.order


def _check_witness(h: LatticeHom, e: int) -> None:
    if not is_perfect_labeling(h, e):
        raise AssertionError(f"search produced a non-perfect witness {h}")
    if kernel_lattice(h).determinant() != ball_size(BallSpec(h.n, e)):
        raise AssertionError(f"kernel of witness {h} has the wrong index")


def naive_search_oracle(n: int, e: int, budget: Optional[int] = None, first_only: bool = False) -> SearchReport:
    """Test every image tuple over every group of order |B^n(e)|."""
    budget = default_budget() if budget is None else budget
    size = ball_size(BallSpec(n, e))
    report = SearchReport(n, e, "naive", size, symmetry_mode=NAIVE_SYMMETRY)
    t0 = time.perf_counter()
    groups = enumerate_abelian_groups(size)
    total = sum(G.order ** n for G in groups)
    if total > NAIVE_HARD_CAP:
        raise BudgetExceeded(total, NAIVE_HARD_CAP, 0, 0)
    if total > budget:
        raise BudgetExceeded(total, budget, 0, 0)
    stopped = False
    for G in groups:
        report.groups_examined.append(G)
        for images in product(list(G.elements()), repeat=n):
            report.candidates_examined += 1
            h = LatticeHom(G, images)
            if is_perfect_labeling(h, e):
                report.witnesses.append(h)
                if first_only:
                    stopped = True
                    break
        if stopped:
            break
    report.exhaustive = not stopped
    report.wall_time = time.perf_counter() - t0
    return report


def search_linear_pl(
    n: int,
    e: int,
    mode: str = "reduced",
    budget: Optional[int] = None,
    first_only: bool = False,
    cross_check_limit: int = CROSS_CHECK_LIMIT,
) -> SearchReport:
    """Search all labelings Z^n -> G (|G| = |B^n(e)|) that are bijective on B^n(e).

    In reduced mode the witnesses are orbit representatives; when the naive
    search is small enough (at most cross_check_limit tuples) it is run as
    well and the two must agree orbit for orbit.
    """
    if mode == "naive":
        return naive_search_oracle(n, e, budget, first_only)
    if mode != "reduced":
        raise ValueError(f"mode must be 'naive' or 'reduced', got {mode!r}")
    BallSpec(n, e)
    budget = default_budget() if budget is None else budget
    size = ball_size(BallSpec(n, e))
    report = SearchReport(n, e, "reduced", size, symmetry_mode=REDUCED_SYMMETRY)
    t0 = time.perf_counter()
    prune = e >= 1
    groups = enumerate_abelian_groups(size)
    stopped = False
    for gi, G in enumerate(groups):
        needed = candidate_count(n, G, prune)
        if report.candidates_examined + needed > budget:
            raise BudgetExceeded(needed, budget - report.candidates_examined, gi, report.candidates_examined)
        report.groups_examined.append(G)
        labeler = _BallLabeler(n, e, G)
        for all_rows, rows in _canonical_rows(n, G, prune):
            report.candidates_examined += len(all_rows)
            report.canonical_candidates += len(rows)
            tuples = [tuple(G.decode(c) for c in row) for row in rows.tolist()]
            if prune:
                generating = [_generates(G, t) for t in tuples]
                report.pruned += generating.count(False)
                tuples = [t for t, ok in zip(tuples, generating) if ok]
            if not tuples:
                continue
            arr = np.array(tuples, dtype=np.int64).reshape(len(tuples), n, G.rank)
            for t, ok in zip(tuples, labeler.perfect(arr)):
                if ok:
                    h = LatticeHom(G, t)
                    _check_witness(h, e)
                    report.witnesses.append(h)
                    if first_only:
                        stopped = True
                        break
            if stopped:
                break
        if stopped:
            break
    report.exhaustive = not stopped
    if not stopped and sum(G.order ** n for G in groups) <= cross_check_limit:
        _cross_validate(report)
    report.wall_time = time.perf_counter() - t0
    return report


def _cross_validate(report: SearchReport) -> None:
    oracle = naive_search_oracle(report.n, report.e, budget=NAIVE_HARD_CAP)
    found = {(h.group, h.images) for h in oracle.witnesses}
    expanded = set()
    for h in report.witnesses:
        expanded |= {(h.group, t) for t in orbit(h.images, h.group)}
    if found != expanded:
        raise AssertionError(
            f"reduced search disagrees with the naive oracle for (n, e) = ({report.n}, {report.e})"
        )
    report.cross_validated = True
