"""Dense exact linear algebra over GF(q).

Matrices are 2-d numpy uint8 arrays whose entries are field element indices
(see ``field.FiniteField``).  Reduced row-echelon form is the canonical
representation for every subspace in the package: two subspaces are equal
as sets exactly when their RREF bases are identical arrays, so equality,
deduplication and containment all reduce to array comparisons.

Pivot selection is always first-nonzero; there is nothing to gain from
pivoting heuristics in exact arithmetic and determinism matters more.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import AmbientMismatch, FieldMismatch
from .field import FiniteField, field as make_field


def as_matrix(rows, cols: int | None = None) -> np.ndarray:
    M = np.asarray(rows, dtype=np.uint8)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {M.shape}")
    if cols is not None and M.shape[1] != cols:
        raise ValueError(f"expected {cols} columns, got {M.shape[1]}")
    return M


def rref(K: FiniteField, M) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form.

    Returns (R, rank, pivot_columns).  R is row-equivalent to M, pivot
    entries are 1, pivot columns are otherwise zero, and pivots appear in
    strictly increasing column order.
    """
    R = as_matrix(M).copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        below = np.nonzero(R[r:, col])[0]
        if below.size == 0:
            continue
        piv = r + int(below[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        pv = int(R[r, col])
        if pv != 1:
            R[r] = K.mul_table[K.inv(pv), R[r]]
        others = np.nonzero(R[:, col])[0]
        others = others[others != r]
        if others.size:
            factors = R[others, col]
            R[others] = K.sub_table[R[others], K.mul_table[factors[:, None], R[r][None, :]]]
        pivots.append(col)
        r += 1
    return R, r, pivots


def rank(K: FiniteField, M) -> int:
    return rref(K, M)[1]


def nullspace(K: FiniteField, M) -> "Subspace":
    """Basis of {x : M x = 0} as a Subspace (solutions are rows)."""
    M = as_matrix(M)
    ncols = M.shape[1]
    R, r, pivots = rref(K, M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = K.neg_table[R[row, f]]
    # the standard kernel basis is not itself in RREF (free-column vectors
    # carry entries at earlier pivot columns), so canonicalize it
    return Subspace.from_rows(K, basis, ncols)


@dataclass(frozen=True)
class Subspace:
    """A K-linear subspace of K^n, stored as an RREF basis with no zero rows."""

    field: FiniteField
    ambient_dim: int
    basis: np.ndarray
    _checked: bool = dc_field(default=False, repr=False, compare=False)

    def __post_init__(self):
        B = as_matrix(self.basis, self.ambient_dim)
        if not self._checked:
            R, r, _ = rref(self.field, B)
            B = R[:r]
        B = np.ascontiguousarray(B, dtype=np.uint8)
        B.setflags(write=False)
        object.__setattr__(self, "basis", B)

    @classmethod
    def from_rows(cls, K: FiniteField, rows, ambient_dim: int | None = None) -> "Subspace":
        M = as_matrix(rows) if ambient_dim is None else as_matrix(rows, ambient_dim)
        R, r, _ = rref(K, M)
        return cls(K, M.shape[1], R[:r], _checked=True)

    @classmethod
    def zero(cls, K: FiniteField, n: int) -> "Subspace":
        return cls(K, n, np.zeros((0, n), dtype=np.uint8), _checked=True)

    @classmethod
    def full(cls, K: FiniteField, n: int) -> "Subspace":
        return cls(K, n, np.eye(n, dtype=np.uint8), _checked=True)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def pivots(self) -> list[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.basis]

    def _check_ambient(self, other: "Subspace") -> None:
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"ambient dims differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis.tobytes()))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        stacked = np.vstack([self.basis, other.basis])
        return Subspace.from_rows(self.field, stacked, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of (x, y) -> x A - y B."""
        self._check_ambient(other)
        K = self.field
        a, b = self.dim, other.dim
        if a == 0 or b == 0:
            return Subspace.zero(K, self.ambient_dim)
        # columns of D are the coordinates (x, y); D (x,y)^T = A^T x - B^T y
        D = np.hstack([self.basis.T, K.neg_table[other.basis.T]])
        ker = nullspace(K, D)
        if ker.dim == 0:
            return Subspace.zero(K, self.ambient_dim)
        xs = ker.basis[:, :a]
        rows = mat_mul(K, xs, self.basis)
        return Subspace.from_rows(K, rows, self.ambient_dim)

    def contains_vector(self, v) -> bool:
        v = np.asarray(v, dtype=np.uint8)
        if v.shape != (self.ambient_dim,):
            raise AmbientMismatch(f"vector shape {v.shape} vs ambient {self.ambient_dim}")
        K = self.field
        r = v.copy()
        for row, pc in zip(self.basis, self.pivots):
            c = r[pc]
            if c:
                r = K.sub_table[r, K.mul_table[c, row]]
        return not r.any()

    def __le__(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains_vector(row) for row in self.basis)

    def __repr__(self) -> str:
        return (
            f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, "
            f"field={self.field.spec_string()})"
        )


def mat_mul(K: FiniteField, A, B) -> np.ndarray:
    """Matrix product over GF(q) via the field tables."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for k in range(A.shape[1]):
        col = A[:, k]
        if not col.any():
            continue
        out = K.add_table[out, K.mul_table[col[:, None], B[k][None, :]]]
    return out


def mat_vec(K: FiniteField, A, x) -> np.ndarray:
    return mat_mul(K, A, np.asarray(x, dtype=np.uint8).reshape(-1, 1))[:, 0]


def span_vectors(K: FiniteField, rows) -> list[tuple[int, ...]]:
    """Every vector in the row span, by brute-force enumeration.

    Exponential in the rank; intended as an independent oracle for tests
    and tiny inputs only.
    """
    R, r, _ = rref(K, rows)
    basis = R[:r]
    n = basis.shape[1] if r else as_matrix(rows).shape[1]
    out = [np.zeros(n, dtype=np.uint8)]
    for row in basis:
        scaled = [K.mul_table[c, row] for c in range(K.q)]
        out = [K.add_table[v, s] for v in out for s in scaled]
    seen = {}
    for v in out:
        seen[tuple(int(t) for t in v)] = None
    return list(seen)


# -- plain-text matrix format -------------------------------------------------
#
# First line: "rows cols q"; then one line per row of space-separated element
# indices in [0, q).

def format_matrix(K: FiniteField, M) -> str:
    M = as_matrix(M)
    lines = [f"{M.shape[0]} {M.shape[1]} {K.q}"]
    for row in M:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, K: FiniteField | None = None) -> tuple[np.ndarray, FiniteField]:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"bad matrix header {lines[0]!r}")
    nrows, ncols, q = (int(t) for t in header)
    if K is None:
        K = make_field(*_default_field_args(q))
    elif K.q != q:
        raise FieldMismatch(f"matrix declares q={q} but field is {K.spec_string()}")
    if len(lines) - 1 != nrows:
        raise ValueError(f"expected {nrows} rows, got {len(lines) - 1}")
    M = np.zeros((nrows, ncols), dtype=np.uint8)
    for i, ln in enumerate(lines[1:]):
        vals = [int(t) for t in ln.split()]
        if len(vals) != ncols:
            raise ValueError(f"row {i} has {len(vals)} entries, expected {ncols}")
        if any(not 0 <= v < q for v in vals):
            raise ValueError(f"row {i} has entries outside [0, {q})")
        M[i] = vals
    return M, K


def _default_field_args(q: int) -> tuple[int, int]:
    from .field import _factor_prime_power

    return _factor_prime_power(q)
