"""Exact integer linear algebra over Z.

Smith normal form, Hermite normal form of lattice bases, kernels, and the
structure of finitely generated abelian groups given by generators and
relations. Lattices are always represented by a matrix whose *columns* form
a Z-basis; returned bases are in column Hermite normal form (the transpose
of the row HNF of the basis vectors) so equal lattices give equal matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import InvalidInput, NotWellDefined
from .matrix import IntMatrix


@dataclass(frozen=True)
class FinAbGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        if self.free_rank < 0:
            raise InvalidInput("negative free rank")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise InvalidInput(f"invariant factors must be >= 2: {fs}")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise InvalidInput(f"invariant factors must form a divisibility chain: {fs}")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Sequence[int]) -> FinAbGroup:
        """Canonical form of Z^free_rank + sum of Z/n for n in ``orders``
        (orders may be arbitrary; 0 means Z, 1 means trivial)."""
        d = [abs(n) for n in orders]
        free = free_rank + sum(1 for n in d if n == 0)
        diag = smith_normal_form(IntMatrix.diagonal([n for n in d if n]), track=False).diagonal
        return cls(free, tuple(x for x in diag if x > 1))

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    def torsion(self) -> FinAbGroup:
        return FinAbGroup(0, self.invariant_factors)

    def __add__(self, other: FinAbGroup) -> FinAbGroup:
        return FinAbGroup.from_orders(self.free_rank + other.free_rank,
                                      self.invariant_factors + other.invariant_factors)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("ℤ")
        elif self.free_rank > 1:
            parts.append(f"ℤ^{self.free_rank}")
        parts += [f"ℤ/{d}" for d in self.invariant_factors]
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SnfDecomposition:
    """U @ A @ V == D with U, V unimodular and D in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


# ---------------------------------------------------------------------------
# Smith normal form


def _min_abs_position(a, t, m, n):
    best = None
    for i in range(t, m):
        row = a[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(A: IntMatrix, track: bool = True) -> SnfDecomposition:
    """Smith normal form with transforms.

    Uses a minimal-absolute-value pivot. With ``track=False`` only D is
    computed and U, V are returned as identities of the right size; that is
    what the structure computations use when no change of basis is needed.
    """
    m, n = A.shape
    a = A.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        if track:
            U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        if track:
            for row in V:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, c):  # row_dst += c * row_src
        rs, rd = a[src], a[dst]
        for j in range(n):
            if rs[j]:
                rd[j] += c * rs[j]
        if track:
            us, ud = U[src], U[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += c * us[j]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in a:
            if row[src]:
                row[dst] += c * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] += c * row[src]

    for t in range(min(m, n)):
        best = _min_abs_position(a, t, m, n)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean &= a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean &= a[t][j] == 0
            if not clean:
                # a remainder smaller than the pivot survived: promote it
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                U[t] = [-x for x in U[t]]

    ident = IntMatrix.identity
    return SnfDecomposition(
        IntMatrix(U, m, m) if track else ident(m),
        IntMatrix(a, m, n),
        IntMatrix(V, n, n) if track else ident(n),
    )


# ---------------------------------------------------------------------------
# Hermite normal form and lattice helpers


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _row_echelon(rows: list[list[int]], ncols: int, track: list[list[int]] | None = None):
    """In-place integer row echelon form; returns the pivot columns.

    ``track`` (if given) receives the same row operations. Pivots end up
    positive; nonzero rows come first.
    """
    r = 0
    pivots = []
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        if track is not None:
            track[r], track[k] = track[k], track[r]
        for i in range(r + 1, nrows):
            b = rows[i][c]
            if not b:
                continue
            a = rows[r][c]
            if b % a == 0:
                q = b // a
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                if track is not None:
                    track[i] = [x - q * y for x, y in zip(track[i], track[r])]
                continue
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            ra, rb = rows[r], rows[i]
            rows[r] = [x * u + y * v for u, v in zip(ra, rb)]
            rows[i] = [ag * v - bg * u for u, v in zip(ra, rb)]
            if track is not None:
                ta, tb = track[r], track[i]
                track[r] = [x * u + y * v for u, v in zip(ta, tb)]
                track[i] = [ag * v - bg * u for u, v in zip(ta, tb)]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
            if track is not None:
                track[r] = [-x for x in track[r]]
        pivots.append(c)
        r += 1
    return pivots


def hnf_rows(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """Canonical basis (row Hermite normal form) of the lattice spanned by
    ``vectors`` in Z^dim. Pivots positive, entries above a pivot in [0, pivot)."""
    rows = [list(v) for v in vectors]
    pivots = _row_echelon(rows, dim)
    rows = rows[:len(pivots)]
    for k, c in enumerate(pivots):
        p = rows[k][c]
        for i in range(k):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]
    return rows


def image_lattice(A: IntMatrix) -> IntMatrix:
    """Canonical basis (as columns) of the lattice spanned by the columns of A."""
    return IntMatrix.from_columns(hnf_rows(A.columns(), A.nrows), A.nrows)


def lattice_coordinates(basis: IntMatrix, v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer c with basis @ c == v, or None when v is outside the lattice.

    ``basis`` must be in the canonical form returned by :func:`image_lattice`.
    """
    rest = list(v)
    coords = []
    for b in basis.columns():
        c = next(i for i, x in enumerate(b) if x)
        q, r = divmod(rest[c], b[c])
        if r:
            return None
        coords.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, b)]
    return tuple(coords) if not any(rest) else None


def rank(A: IntMatrix) -> int:
    return len(_row_echelon(A.tolist(), A.ncols))


def kernel_lattice(A: IntMatrix) -> IntMatrix:
    """Canonical Z-basis (columns) of {x : A x = 0}."""
    n = A.ncols
    eq = A.tolist()
    pivots = _row_echelon(eq, n)
    eq = eq[:len(pivots)]
    # column-reduce the echelon form: W @ E^T has zero rows exactly on the kernel
    cols = [list(c) for c in zip(*eq)] if eq else [[] for _ in range(n)]
    W = [[int(i == j) for j in range(n)] for i in range(n)]
    r = len(_row_echelon(cols, len(eq), W))
    return IntMatrix.from_columns(hnf_rows(W[r:], n), n)


def cokernel_structure(A: IntMatrix) -> FinAbGroup:
    """Structure of Z^m / (column span of A) for an m x n matrix A."""
    diag = smith_normal_form(A, track=False).diagonal
    r = sum(1 for d in diag if d)
    return FinAbGroup(A.nrows - r, tuple(d for d in diag if d > 1))


def subgroup_structure_in_quotient(relations: IntMatrix, generators: IntMatrix) -> FinAbGroup:
    """Structure of (<generators> + R) / R with R the column span of ``relations``."""
    m = relations.nrows
    if generators.nrows != m:
        raise InvalidInput("generators and relations live in different Z^m")
    span = image_lattice(IntMatrix.hstack([generators, relations]))
    coords = [lattice_coordinates(span, r) for r in relations.columns()]
    C = IntMatrix.from_columns(coords, span.ncols)
    return cokernel_structure(C)


def kernel_of_endomorphism_on_quotient(relations: IntMatrix, M: IntMatrix) -> FinAbGroup:
    """Structure of {x + R : M x in R} / R, R the column span of ``relations``.

    Raises NotWellDefined unless M maps R into itself.
    """
    m = M.nrows
    if M.ncols != m or relations.nrows != m:
        raise InvalidInput("endomorphism and relations must act on the same Z^m")
    R = image_lattice(relations)
    for j, col in enumerate((M @ relations).columns()):
        if lattice_coordinates(R, col) is None:
            raise NotWellDefined(f"M does not preserve the relation lattice (column {j})")
    # x with M x = R y  <=>  (x, y) in ker [M | -R]
    K = kernel_lattice(IntMatrix.hstack([M, -R]))
    gens = K.select_rows(range(m))
    return subgroup_structure_in_quotient(relations, gens)

