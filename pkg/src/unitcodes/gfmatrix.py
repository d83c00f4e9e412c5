"""Exact dense linear algebra over prime fields GF(r).

Entries live in numpy int64 arrays reduced mod r; elimination uses
modular inverses (``pow(x, -1, r)``), so every result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .rings import is_prime


@dataclass(frozen=True)
class PrimeField:
    r: int

    def __post_init__(self) -> None:
        if not is_prime(self.r):
            raise ValueError(f"field order must be prime, got {self.r}")

    def inv(self, a: int) -> int:
        return pow(int(a) % self.r, -1, self.r)


class GfMatrix:
    """Dense matrix over GF(r). Externally immutable; operations copy."""

    def __init__(self, field: PrimeField | int, entries: Sequence[Sequence[int]] | np.ndarray):
        if isinstance(field, int):
            field = PrimeField(field)
        self.field = field
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        self._a = np.mod(arr, field.r)
        self._a.setflags(write=False)

    @property
    def r(self) -> int:
        return self.field.r

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def array(self) -> np.ndarray:
        """Read-only view of the underlying residue array."""
        return self._a

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GfMatrix)
            and self.r == other.r
            and self.shape == other.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __repr__(self) -> str:
        return f"GfMatrix(r={self.r}, shape={self.shape})"

    def transpose(self) -> "GfMatrix":
        return GfMatrix(self.field, self._a.T)

    def select_columns(self, cols: Iterable[int]) -> "GfMatrix":
        idx = list(cols)
        if len(set(idx)) != len(idx):
            raise ValueError("column indices must be distinct")
        for c in idx:
            if not 0 <= c < self.cols:
                raise IndexError(f"column index {c} out of range for {self.cols} columns")
        return GfMatrix(self.field, self._a[:, idx])

    def rref(self) -> tuple["GfMatrix", list[int]]:
        """Reduced row echelon form and the pivot column list."""
        m, pivots = _eliminate(self._a.copy(), self.r)
        return GfMatrix(self.field, m), pivots

    def rank(self) -> int:
        _, pivots = _eliminate(self._a.copy(), self.r)
        return len(pivots)

    def columns_dependent(self, cols: Iterable[int]) -> bool:
        sub = self.select_columns(cols)
        return sub.rank() < sub.cols

    def nullspace(self) -> "GfMatrix":
        """Basis of {x : M x = 0}, one vector per row; (cols - rank) rows."""
        rr, pivots = _eliminate(self._a.copy(), self.r)
        r = self.r
        free = [c for c in range(self.cols) if c not in pivots]
        basis = np.zeros((len(free), self.cols), dtype=np.int64)
        for i, fc in enumerate(free):
            basis[i, fc] = 1
            for row, pc in enumerate(pivots):
                basis[i, pc] = (-int(rr[row, fc])) % r
        return GfMatrix(self.field, basis)

    def row_space_basis(self) -> "GfMatrix":
        """Nonzero rref rows: a canonical basis of the row space."""
        rr, pivots = self.rref()
        return GfMatrix(self.field, rr.array()[: len(pivots)])


def _eliminate(a: np.ndarray, r: int) -> tuple[np.ndarray, list[int]]:
    """In-place Gauss-Jordan over GF(r); returns (rref array, pivot columns)."""
    rows, cols = a.shape
    pivots: list[int] = []
    pr = 0
    for pc in range(cols):
        if pr >= rows:
            break
        nz = np.nonzero(a[pr:, pc])[0]
        if nz.size == 0:
            continue
        sel = pr + int(nz[0])
        if sel != pr:
            a[[pr, sel]] = a[[sel, pr]]
        inv = pow(int(a[pr, pc]), -1, r)
        a[pr] = (a[pr] * inv) % r
        col = a[:, pc].copy()
        col[pr] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[pr])) % r
        pivots.append(pc)
        pr += 1
    return a, pivots


def identity(r: int, k: int) -> GfMatrix:
    return GfMatrix(r, np.eye(k, dtype=np.int64))
