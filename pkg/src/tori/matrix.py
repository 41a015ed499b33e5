"""Immutable exact integer matrices.

Entries are Python ints, so there is no magnitude bound. A matrix always
knows its shape, which makes 3x0 and 0x3 distinct objects; empty matrices
stand for maps to or from the zero lattice.
"""
from __future__ import annotations

import operator
from typing import Iterable, Sequence


class IntMatrix:
    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]] = (), nrows: int | None = None,
                 ncols: int | None = None):
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if nrows is None:
            nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if len(data) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(data)}")
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(f"row {i} has length {len(row)}, expected {ncols}")
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimension")
        self._rows = data
        self.nrows = nrows
        self.ncols = ncols
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diagonal(cls, entries: Sequence[int], nrows: int | None = None,
                 ncols: int | None = None) -> IntMatrix:
        nrows = len(entries) if nrows is None else nrows
        ncols = len(entries) if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, d in enumerate(entries):
            rows[i][i] = d
        return cls(rows, nrows, ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        """Matrix whose j-th column is ``columns[j]``; ``nrows`` fixes the shape
        when there are no columns."""
        for c in columns:
            if len(c) != nrows:
                raise ValueError(f"column of length {len(c)}, expected {nrows}")
        return cls([[c[i] for c in columns] for i in range(nrows)], nrows, len(columns))

    @classmethod
    def block_diagonal(cls, blocks: Sequence[IntMatrix]) -> IntMatrix:
        m = sum(b.nrows for b in blocks)
        n = sum(b.ncols for b in blocks)
        rows = [[0] * n for _ in range(m)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b._rows):
                rows[r0 + i][c0:c0 + b.ncols] = row
            r0 += b.nrows
            c0 += b.ncols
        return cls(rows, m, n)

    @classmethod
    def hstack(cls, mats: Sequence[IntMatrix], nrows: int | None = None) -> IntMatrix:
        if not mats:
            return cls.zeros(nrows or 0, 0)
        m = mats[0].nrows
        if any(a.nrows != m for a in mats):
            raise ValueError("hstack: row counts differ")
        rows = [sum((list(a._rows[i]) for a in mats), []) for i in range(m)]
        return cls(rows, m, sum(a.ncols for a in mats))

    @classmethod
    def vstack(cls, mats: Sequence[IntMatrix], ncols: int | None = None) -> IntMatrix:
        if not mats:
            return cls.zeros(0, ncols or 0)
        n = mats[0].ncols
        if any(a.ncols != n for a in mats):
            raise ValueError("vstack: column counts differ")
        return cls([row for a in mats for row in a._rows], sum(a.nrows for a in mats), n)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def select_columns(self, idx: Sequence[int]) -> IntMatrix:
        return IntMatrix([[row[j] for j in idx] for row in self._rows], self.nrows, len(idx))

    def select_rows(self, idx: Sequence[int]) -> IntMatrix:
        return IntMatrix([self._rows[i] for i in idx], len(idx), self.ncols)

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), self.ncols, self.nrows) if self.nrows else \
            IntMatrix.zeros(self.ncols, 0)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [()] * other.ncols
        rows = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        return IntMatrix(rows, self.nrows, other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._rows)

    def _check_same(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                         self.nrows, self.ncols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                         self.nrows, self.ncols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-a for a in r] for r in self._rows], self.nrows, self.ncols)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix([[c * a for a in r] for r in self._rows], self.nrows, self.ncols)

    def trace(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum(self._rows[i][i] for i in range(self.nrows))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination; det of 0x0 is 1."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("det of a non-square matrix")
        a = [list(r) for r in self._rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == (i == j) for i in range(self.nrows) for j in range(self.ncols))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    # -- protocol ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self._rows))
        return self._hash

    def __repr__(self) -> str:
        if not self.nrows or not self.ncols:
            return f"IntMatrix.zeros({self.nrows}, {self.ncols})"
        return f"IntMatrix({self.tolist()!r})"
