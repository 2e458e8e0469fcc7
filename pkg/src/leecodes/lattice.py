"""Kernel sublattices of homomorphisms Z^n -> G, and Construction A.

All arithmetic is on Python integers; nothing is reduced modulo anything
except where the group structure says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .groups import FiniteAbelianGroup, LatticeHom

Matrix = Tuple[Tuple[int, ...], ...]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def row_echelon(rows: Sequence[Sequence[int]], columns: Optional[Sequence[int]] = None) -> list[list[int]]:
    """Integer row echelon form by unimodular row operations.

    Pivots are taken in the given column order (default: left to right) and
    are positive. The row lattice is preserved; zero rows are kept at the
    bottom so the caller can read off relations.
    """
    A = [list(r) for r in rows]
    if not A:
        return A
    ncols = len(A[0])
    cols = list(range(ncols)) if columns is None else list(columns)
    top = 0
    for c in cols:
        if top == len(A):
            break
        for i in range(top + 1, len(A)):
            if A[i][c] == 0:
                continue
            g, s, t = _xgcd(A[top][c], A[i][c])
            u, v = A[top][c] // g, A[i][c] // g
            # [[s, t], [-v, u]] has determinant s*u + t*v = 1
            A[top], A[i] = (
                [s * x + t * y for x, y in zip(A[top], A[i])],
                [-v * x + u * y for x, y in zip(A[top], A[i])],
            )
        if A[top][c] == 0:
            continue
        if A[top][c] < 0:
            A[top] = [-x for x in A[top]]
        top += 1
    return A


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF of a full-rank square integer matrix.

    Upper triangular, positive diagonal, entries above each pivot reduced
    into [0, pivot).
    """
    A = row_echelon(rows)
    n = len(A)
    for i in range(n):
        if A[i][i] == 0:
            raise ValueError("matrix is not of full rank")
    for i in range(n):
        for k in range(i):
            q = A[k][i] // A[i][i]
            if q:
                A[k] = [x - q * y for x, y in zip(A[k], A[i])]
    return A


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class IntegerLattice:
    """Full-rank sublattice of Z^n; rows of `basis` generate it."""

    basis: Matrix

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(int(x) for x in r) for r in self.basis))

    @property
    def n(self) -> int:
        return len(self.basis)

    def determinant(self) -> int:
        return abs(determinant(self.basis))

    index = determinant

    def hnf(self) -> "IntegerLattice":
        return IntegerLattice(tuple(map(tuple, hermite_normal_form(self.basis))))

    def contains(self, x: Sequence[int]) -> bool:
        """Membership test by solving against the HNF basis (upper triangular)."""
        H = hermite_normal_form(self.basis)
        r = list(x)
        for i, row in enumerate(H):
            q, rem = divmod(r[i], row[i])
            if rem:
                return False
            r = [a - q * b for a, b in zip(r, row)]
        return not any(r)

    def residue(self, x: Sequence[int]) -> Tuple[int, ...]:
        """Canonical representative of x + L, with coordinate i reduced into [0, H_ii)."""
        H = hermite_normal_form(self.basis)
        r = list(x)
        for i, row in enumerate(H):
            q = r[i] // row[i]
            r = [a - q * b for a, b in zip(r, row)]
        return tuple(r)


def kernel_lattice(h: LatticeHom) -> IntegerLattice:
    """HNF basis of {x in Z^n : h(x) = 0}.

    Row-reduces [A | I] over the relation rows [D | 0], where A holds the
    images and D the invariant factors; rows whose A-part vanishes span the
    kernel.
    """
    G = h.group
    n, k = h.n, G.rank
    rows = [list(g) + [int(i == j) for j in range(n)] for i, g in enumerate(h.images)]
    rows += [[d * int(i == j) for j in range(k)] + [0] * n for i, d in enumerate(G.invariant_factors)]
    E = row_echelon(rows, columns=range(k))
    kernel = [r[k:] for r in E if not any(r[:k])]
    assert len(kernel) == n, "kernel of a map to a finite group has full rank"
    return IntegerLattice(tuple(map(tuple, hermite_normal_form(kernel))))


def construction_a_lift(code_hom: LatticeHom, q: int, e: Optional[int] = None) -> IntegerLattice:
    """Lattice {x in Z^n : x mod q in C} for the code C = ker(code_hom) in Z_q^n.

    code_hom must be well defined on Z_q^n, i.e. q kills every image. When a
    radius e is given, the large-alphabet condition q >= 2e+1 is enforced.
    """
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    if e is not None and q < 2 * e + 1:
        raise ValueError(f"q = {q} is below 2e+1 = {2 * e + 1}")
    G = code_hom.group
    for g in code_hom.images:
        if G.scale(q, g) != G.identity():
            raise ValueError(f"image {g} is not killed by q = {q}; map is not defined on Z_{q}^n")
    # q*Z^n lies in the kernel because q kills the images
    return kernel_lattice(code_hom)


def full_space_code(n: int) -> LatticeHom:
    """C = Z_q^n, presented as the zero map to the trivial group."""
    return LatticeHom(FiniteAbelianGroup(()), ((),) * n)

