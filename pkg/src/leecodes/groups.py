"""Finite abelian groups, homomorphisms Z^n -> G, and the ball-labeling criterion.

A linear perfect Lee code PL(n, e) exists iff some homomorphism from Z^n onto a
finite abelian group G restricts to a bijection B^n(e) -> G; the code is the
kernel of that homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, prod
from typing import Iterator, Optional, Sequence, Tuple

from .lee import DEFAULT_ENUMERATION_CAP, BallSpec, LeePoint, ball_size, enumerate_ball

GroupElement = Tuple[int, ...]

TRIAL_DIVISION_BOUND = 10**12


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k, every d_i >= 2.

    The empty factor list is the trivial group.
    """

    invariant_factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {factors}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors must form a divisibility chain, got {factors}")

    @classmethod
    def cyclic(cls, order: int) -> "FiniteAbelianGroup":
        return cls(() if order == 1 else (order,))

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def identity(self) -> GroupElement:
        return (0,) * self.rank

    def reduce(self, residues: Sequence[int]) -> GroupElement:
        if len(residues) != self.rank:
            raise ValueError(f"element {tuple(residues)} has wrong length for group {self}")
        return tuple(r % d for r, d in zip(residues, self.invariant_factors))

    def contains(self, g: Sequence[int]) -> bool:
        return len(g) == self.rank and all(0 <= r < d for r, d in zip(g, self.invariant_factors))

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.invariant_factors))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple(-a % d for a, d in zip(g, self.invariant_factors))

    def scale(self, c: int, g: GroupElement) -> GroupElement:
        return tuple(c * a % d for a, d in zip(g, self.invariant_factors))

    def encode(self, g: GroupElement) -> int:
        """Mixed-radix index of g in [0, |G|), first factor most significant."""
        code = 0
        for r, d in zip(g, self.invariant_factors):
            code = code * d + r
        return code

    def decode(self, code: int) -> GroupElement:
        out = []
        for d in reversed(self.invariant_factors):
            code, r = divmod(code, d)
            out.append(r)
        return tuple(reversed(out))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in increasing code order."""
        return product(*(range(d) for d in self.invariant_factors))

    def element_order(self, g: GroupElement) -> int:
        o = 1
        for r, d in zip(g, self.invariant_factors):
            o = o * (d // gcd(r, d)) // gcd(o, d // gcd(r, d))
        return o

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z_{d}" for d in self.invariant_factors)


def group_order(G: FiniteAbelianGroup) -> int:
    return G.order


def factorize(n: int, bound: int = TRIAL_DIVISION_BOUND) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > bound:
        raise ValueError(f"{n} exceeds the trial-division bound {bound}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def integer_partitions(k: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of k as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in integer_partitions(k - first, first):
            yield (first,) + rest


def enumerate_abelian_groups(order: int) -> list[FiniteAbelianGroup]:
    """One representative per isomorphism class of abelian groups of the given order.

    Sorted by rank, then lexicographically on invariant factors; so the cyclic
    group always comes first.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    fac = factorize(order)
    groups = []
    for choice in product(*(list(integer_partitions(a)) for a in fac.values())):
        rank = max((len(lam) for lam in choice), default=0)
        # largest invariant factor collects the largest part of every prime's partition
        factors = []
        for i in range(rank):
            d = 1
            for p, lam in zip(fac, choice):
                if i < len(lam):
                    d *= p ** lam[i]
            factors.append(d)
        groups.append(FiniteAbelianGroup(tuple(reversed(factors))))
    groups.sort(key=lambda G: (G.rank, G.invariant_factors))
    return groups


@dataclass(frozen=True)
class LatticeHom:
    """Homomorphism Z^n -> G given by the images of the standard basis vectors."""

    group: FiniteAbelianGroup
    images: Tuple[GroupElement, ...]

    def __post_init__(self):
        images = tuple(tuple(int(r) for r in g) for g in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a homomorphism needs at least one basis image")
        for g in images:
            if not self.group.contains(g):
                raise ValueError(f"image {g} is not a reduced element of {self.group}")

    @property
    def n(self) -> int:
        return len(self.images)


def apply_hom(h: LatticeHom, x: Sequence[int]) -> GroupElement:
    if len(x) != h.n:
        raise ValueError(f"dimension mismatch: point has {len(x)} coordinates, map has {h.n}")
    out = []
    for j, d in enumerate(h.group.invariant_factors):
        out.append(sum(c * g[j] for c, g in zip(x, h.images)) % d)
    return tuple(out)


@lru_cache(maxsize=64)
def _cached_ball(n: int, e: int, cap: int) -> Tuple[LeePoint, ...]:
    return tuple(enumerate_ball(BallSpec(n, e), cap=cap))


@dataclass(frozen=True)
class LabelingCheck:
    """Outcome of a perfect-labeling test. Truthy iff the labeling is perfect."""

    perfect: bool
    collision: Optional[Tuple[LeePoint, LeePoint]] = None
    size_mismatch: Optional[Tuple[int, int]] = None  # (|G|, |B^n(e)|)

    def __bool__(self):
        return self.perfect

    def to_dict(self) -> dict:
        return {
            "perfect": self.perfect,
            "collision": [list(p) for p in self.collision] if self.collision else None,
            "size_mismatch": (
                {"group_order": self.size_mismatch[0], "ball_size": self.size_mismatch[1]}
                if self.size_mismatch
                else None
            ),
        }


def is_perfect_labeling(h: LatticeHom, e: int, cap: int = DEFAULT_ENUMERATION_CAP) -> LabelingCheck:
    """True iff h maps B^n(e) bijectively onto its group.

    On failure the result carries either the first colliding pair of ball
    points (in lexicographic enumeration order) or the cardinality mismatch.
    """
    spec = BallSpec(h.n, e)
    size = ball_size(spec)
    G = h.group
    if G.order != size:
        return LabelingCheck(False, size_mismatch=(G.order, size))
    seen: list[Optional[LeePoint]] = [None] * G.order
    for b in _cached_ball(h.n, e, cap):
        code = G.encode(apply_hom(h, b))
        prev = seen[code]
        if prev is not None:
            return LabelingCheck(False, collision=(prev, b))
        seen[code] = b
    return LabelingCheck(True)


@dataclass(frozen=True)
class PrimeProjection:
    """Epimorphism G -> Z_p reducing one invariant-factor coordinate mod p.

    Every fiber has `cofactor` = |G|/p elements.
    """

    p: int
    source: FiniteAbelianGroup
    coordinate: int
    cofactor: int

    @property
    def coprime(self) -> bool:
        """Whether p does not divide the cofactor m."""
        return self.cofactor % self.p != 0

    def __call__(self, g: GroupElement) -> int:
        return g[self.coordinate] % self.p


def project_to_prime(G: FiniteAbelianGroup, p: int) -> PrimeProjection:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if G.order % p:
        raise ValueError(f"{p} does not divide |G| = {G.order}")
    candidates = [i for i, d in enumerate(G.invariant_factors) if d % p == 0]
    coordinate = max(candidates, key=lambda i: (G.invariant_factors[i], i))
    return PrimeProjection(p, G, coordinate, G.order // p)


def ball_image_multiset(
    h: LatticeHom, proj: PrimeProjection, e: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Tuple[int, ...]:
    """Multiplicity of each residue of Z_p among psi(phi(b)) for b in B^n(e)."""
    if proj.source != h.group:
        raise ValueError("projection source differs from the homomorphism's group")
    counts = [0] * proj.p
    for b in _cached_ball(h.n, e, cap):
        counts[proj(apply_hom(h, b))] += 1
    return tuple(counts)


def pl_n1_construction(n: int) -> LatticeHom:
    """Perfect 1-error labeling: Z^n -> Z_{2n+1}, e_i -> i."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return LatticeHom(FiniteAbelianGroup.cyclic(2 * n + 1), tuple((i,) for i in range(1, n + 1)))


def pl_2e_construction(e: int) -> LatticeHom:
    """Perfect e-error labeling of the plane: Z^2 -> Z_{2e^2+2e+1}, e_1 -> 1, e_2 -> 2e+1."""
    if e < 1:
        raise ValueError(f"radius must be >= 1, got {e}")
    N = 2 * e * e + 2 * e + 1
    return LatticeHom(FiniteAbelianGroup.cyclic(N), ((1,), ((2 * e + 1) % N,)))


def automorphisms(G: FiniteAbelianGroup, limit: int = 10**6) -> list[Tuple[int, ...]]:
    """Automorphisms of G as permutations of element codes (perm[code(g)] = code(alpha(g))).

    The identity comes first.
    """
    N = G.order
    if G.is_cyclic:
        if N == 1:
            return [(0,)]
        return [tuple(u * c % N for c in range(N)) for u in range(1, N) if gcd(u, N) == 1]
    # generator i may go to any element whose order divides d_i
    choices = [
        [g for g in G.elements() if d % G.element_order(g) == 0]
        for d in G.invariant_factors
    ]
    if prod(len(c) for c in choices) > limit:
        raise ValueError(f"automorphism enumeration of {G} exceeds limit {limit}")
    elems = list(G.elements())
    out = []
    for gens in product(*choices):
        perm = []
        for r in elems:
            img = G.identity()
            for c, g in zip(r, gens):
                img = G.add(img, G.scale(c, g))
            perm.append(G.encode(img))
        if len(set(perm)) == N:
            out.append(tuple(perm))
    out.sort(key=lambda perm: perm != tuple(range(N)))
    return out


def generated_subgroup_order(G: FiniteAbelianGroup, gens: Sequence[GroupElement]) -> int:
    seen = {G.identity()}
    frontier = [G.identity()]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = G.add(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse comma-separated invariant factors, e.g. "13" or "5,5"."""
    text = text.strip()
    if text in ("", "1", "trivial"):
        return FiniteAbelianGroup(())
    return FiniteAbelianGroup(tuple(int(t) for t in text.split(",")))


def parse_images(text: str, G: FiniteAbelianGroup) -> Tuple[GroupElement, ...]:
    """Parse basis images, e.g. "1;5" for Z_13 or "1,0;0,1" for Z_5 x Z_5."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        vals = tuple(int(t) for t in chunk.split(",")) if chunk else ()
        if len(vals) != G.rank:
            raise ValueError(f"image {chunk!r} has {len(vals)} residues, group {G} needs {G.rank}")
        out.append(G.reduce(vals))
    return tuple(out)


def format_group(G: FiniteAbelianGroup) -> str:
    return ",".join(str(d) for d in G.invariant_factors) or "1"


def format_images(images: Sequence[GroupElement]) -> str:
    return ";".join(",".join(str(r) for r in g) for g in images)
