"""Exact sparse linear algebra over the rationals: RREF and kernel bases.

Two interchangeable elimination backends implement the same algorithm with
the same deterministic pivot choice (lowest column index, then lowest row
index): a pure-Python Fraction kernel and a compiled integer-pair kernel.
The compiled one is selected at import when present; ADMZ_PURE_PYTHON=1
forces the fallback.  Outputs are bit-identical either way (the arithmetic
is exact and the elimination order is fixed).
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _gauss_py
from .errors import InvalidInputError

try:
    from . import _gauss_cy
except ImportError:  # compiled kernel not built; pure fallback
    _gauss_cy = None


def available_backends() -> tuple[str, ...]:
    return ("python", "cython") if _gauss_cy is not None else ("python",)


def default_backend() -> str:
    if _gauss_cy is not None and not os.environ.get("ADMZ_PURE_PYTHON"):
        return "cython"
    return "python"


class RationalMatrix:
    """Sparse exact matrix: entries maps (row, col) to nonzero Fractions."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries=None):
        if nrows < 0 or ncols < 0:
            raise InvalidInputError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise InvalidInputError(f"entry ({r},{c}) outside {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise InvalidInputError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = Fraction(v)
        return cls(nrows, ncols, entries)

    @classmethod
    def vstack(cls, top: "RationalMatrix", bottom: "RationalMatrix") -> "RationalMatrix":
        if top.ncols != bottom.ncols:
            raise InvalidInputError("column mismatch in vstack")
        entries = dict(top.entries)
        for (r, c), v in bottom.entries.items():
            entries[(r + top.nrows, c)] = v
        return cls(top.nrows + bottom.nrows, top.ncols, entries)

    def to_rows(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def matvec(self, vec) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise InvalidInputError("vector length mismatch")
        out = [Fraction(0)] * self.nrows
        for (r, c), v in self.entries.items():
            if vec[c]:
                out[r] += v * vec[c]
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


def _resolve_backend(backend) -> str:
    if backend is None:
        return default_backend()
    if backend not in ("python", "cython"):
        raise InvalidInputError(f"unknown backend {backend!r}")
    if backend == "cython" and _gauss_cy is None:
        raise InvalidInputError("cython backend requested but not built")
    return backend


def _rref_dense(m: RationalMatrix, backend) -> tuple[list[list[Fraction]], list[int]]:
    name = _resolve_backend(backend)
    if name == "cython":
        rows = []
        for i in range(m.nrows):
            flat = [0, 1] * m.ncols
            rows.append(flat)
        for (r, c), v in m.entries.items():
            rows[r][2 * c] = v.numerator
            rows[r][2 * c + 1] = v.denominator
        pivots = _gauss_cy.rref_pairs(rows, m.ncols)
        frows = [
            [Fraction(row[2 * j], row[2 * j + 1]) for j in range(m.ncols)]
            for row in rows
        ]
        return frows, pivots
    rows = m.to_rows()
    pivots = _gauss_py.rref_rows(rows, m.ncols)
    return rows, pivots


def rref(m: RationalMatrix, backend=None) -> tuple[RationalMatrix, int]:
    """Canonical reduced row echelon form and rank, exact."""
    rows, pivots = _rref_dense(m, backend)
    entries = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                entries[(i, j)] = v
    return RationalMatrix(m.nrows, m.ncols, entries), len(pivots)


def kernel_basis(m: RationalMatrix, backend=None) -> list[tuple[Fraction, ...]]:
    """Deterministic exact basis of the right kernel.

    One vector per free column, ascending; each vector scaled so its first
    nonzero coordinate is 1.
    """
    rows, pivots = _rref_dense(m, backend)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.ncols
        vec[free] = Fraction(1)
        for i, p in enumerate(pivots):
            if rows[i][free]:
                vec[p] = -rows[i][free]
        for v in vec:
            if v:
                if v != 1:
                    vec = [x / v for x in vec]
                break
        basis.append(tuple(vec))
    return basis
