"""Exact linear algebra over small finite fields.

Field elements are represented by integer codes.  For a prime field F_p the
codes are 0..p-1 with modular arithmetic; for a table field the codes index
the addition/multiplication tables.  All matrix routines work on 2-D numpy
arrays of codes and are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

__all__ = [
    "FieldSpec",
    "PrimeField",
    "SmallTableField",
    "GF4",
    "Matrix",
    "FieldError",
    "NoSolution",
    "kernel_basis",
    "solve",
    "rank",
]


class FieldError(ValueError):
    """Malformed field data or entries outside the field."""


class NoSolution:
    """Returned by :func:`solve` when the system is inconsistent."""

    def __repr__(self):
        return "NoSolution"

    def __eq__(self, other):
        return isinstance(other, NoSolution)

    def __hash__(self):
        return hash("NoSolution")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Common interface: arithmetic on integer-coded elements.

    Subclasses provide vectorised ``add``/``sub``/``mul``/``neg`` on numpy
    arrays (or scalars) plus scalar inversion.
    """

    order: int
    characteristic: int
    one: int  # code of the multiplicative unit; zero is always code 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, x: int) -> int:
        raise NotImplementedError

    def elements(self):
        return range(self.order)

    # -- derived helpers -------------------------------------------------

    def check(self, a) -> np.ndarray:
        arr = np.asarray(a, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise FieldError("entry outside the field of order %d" % self.order)
        return arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] != b.shape[0]:
            raise FieldError("matmul shape mismatch %s @ %s" % (a.shape, b.shape))
        return self._matmul(a, b)

    def _matmul(self, a, b):
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = self.add(out, self.mul(a[:, k : k + 1], b[k : k + 1, :]))
        return out

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros(n, n)
        np.fill_diagonal(m, self.one)
        return m

    def pow_scalar(self, x: int, e: int) -> int:
        r = self.one
        for _ in range(e):
            r = int(self.mul(r, x))
        return r


class PrimeField(FieldSpec):
    def __init__(self, p: int):
        if p > 1 << 16:
            raise FieldError("prime too large: %d" % p)
        if not _is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self.order = p
        self.characteristic = p
        self.one = 1 % p

    def add(self, a, b):
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.p

    def sub(self, a, b):
        return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.p

    def mul(self, a, b):
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.p

    def neg(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.p

    def inv(self, x: int) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, self.p - 2, self.p)

    def _matmul(self, a, b):
        # products bounded by p^2 * inner-dim, far below int64 overflow
        return (a @ b) % self.p

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class SmallTableField(FieldSpec):
    """Finite field given by explicit addition and multiplication tables."""

    MAX_ORDER = 64

    def __init__(self, order: int, add_table, mul_table):
        if order < 2 or order > self.MAX_ORDER:
            raise FieldError("table field order must be in 2..%d" % self.MAX_ORDER)
        self.order = order
        self._add = np.asarray(add_table, dtype=np.int64)
        self._mul = np.asarray(mul_table, dtype=np.int64)
        if self._add.shape != (order, order) or self._mul.shape != (order, order):
            raise FieldError("tables must be order x order")
        self._validate_axioms()
        one_candidates = [
            x for x in range(order) if np.array_equal(self._mul[x], np.arange(order))
        ]
        self.one = one_candidates[0]
        self._neg = np.array(
            [int(np.where(self._add[x] == 0)[0][0]) for x in range(order)],
            dtype=np.int64,
        )
        self._inv = np.zeros(order, dtype=np.int64)
        for x in range(1, order):
            hits = np.where(self._mul[x] == self.one)[0]
            self._inv[x] = int(hits[0])
        rng = np.arange(order)
        self._add_is_xor = np.array_equal(self._add, rng[:, None] ^ rng[None, :])
        # characteristic: additive order of 1
        c, acc = 1, self.one
        while acc != 0:
            acc = int(self._add[acc, self.one])
            c += 1
        self.characteristic = c

    def _validate_axioms(self):
        q = self.order
        idx = np.arange(q)
        A, M = self._add, self._mul
        if A.min() < 0 or A.max() >= q or M.min() < 0 or M.max() >= q:
            raise FieldError("table entries outside 0..%d" % (q - 1))
        if not (np.array_equal(A, A.T) and np.array_equal(M, M.T)):
            raise FieldError("tables must be commutative")
        if not np.array_equal(A[0], idx):
            raise FieldError("code 0 must be the additive identity")
        # associativity of both operations, exhaustively
        if not np.array_equal(A[A[:, :, None], idx[None, None, :]],
                              A[idx[:, None, None], A[None, :, :]]):
            raise FieldError("addition not associative")
        if not np.array_equal(M[M[:, :, None], idx[None, None, :]],
                              M[idx[:, None, None], M[None, :, :]]):
            raise FieldError("multiplication not associative")
        # distributivity: x*(y+z) == x*y + x*z
        lhs = M[idx[:, None, None], A[None, :, :]]
        rhs = A[M[:, :, None], M[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise FieldError("distributivity fails")
        # multiplicative unit and inverses
        units = [x for x in range(q) if np.array_equal(M[x], idx)]
        if len(units) != 1:
            raise FieldError("no unique multiplicative identity")
        one = units[0]
        for x in range(q):
            if x != 0 and one not in M[x]:
                raise FieldError("element %d has no inverse" % x)
            if 0 not in A[x]:
                raise FieldError("element %d has no negative" % x)

    def add(self, a, b):
        # advanced indexing broadcasts the two index arrays natively
        return self._add[np.asarray(a, dtype=np.int64),
                         np.asarray(b, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self._mul[np.asarray(a, dtype=np.int64),
                         np.asarray(b, dtype=np.int64)]

    def _matmul(self, a, b):
        if a.shape[1] == 0:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        prods = self._mul[a[:, :, None], b[None, :, :]]
        if self._add_is_xor:
            return np.bitwise_xor.reduce(prods, axis=1)
        acc = prods[:, 0, :]
        for k in range(1, prods.shape[1]):
            acc = self._add[acc, prods[:, k, :]]
        return acc

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def inv(self, x: int) -> int:
        if int(x) == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self._inv[int(x)])

    def __repr__(self):
        return "TableField(%d)" % self.order

    def __eq__(self, other):
        return (
            isinstance(other, SmallTableField)
            and other.order == self.order
            and np.array_equal(other._add, self._add)
            and np.array_equal(other._mul, self._mul)
        )

    def __hash__(self):
        return hash(("SmallTableField", self.order, self._add.tobytes(), self._mul.tobytes()))


def GF4() -> SmallTableField:
    """The field with four elements; codes 0, 1, w, w^2 = w+1 as 0,1,2,3.

    Addition is XOR on the codes; w generates the multiplicative group.
    """
    add = [[x ^ y for y in range(4)] for x in range(4)]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    return SmallTableField(4, add, mul)


@dataclass(frozen=True)
class Matrix:
    """A rows x cols matrix of field-element codes, row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: np.ndarray = dc_field(repr=False)

    @staticmethod
    def make(field: FieldSpec, data) -> "Matrix":
        arr = field.check(np.asarray(data, dtype=np.int64))
        if arr.ndim != 2:
            raise FieldError("matrix data must be 2-dimensional")
        return Matrix(field, arr.shape[0], arr.shape[1], arr)

    def __post_init__(self):
        if self.entries.shape != (self.rows, self.cols):
            raise FieldError("entry count does not match rows x cols")
        self.field.check(self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, self.entries.T.copy())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldError("field mismatch")
        prod = self.field.matmul(self.entries, other.entries)
        return Matrix(self.field, self.rows, other.cols, prod)


def row_echelon(field: FieldSpec, m: np.ndarray):
    """Reduced row echelon form.  Returns (rref matrix, pivot column list)."""
    r = np.array(m, dtype=np.int64, copy=True)
    rows, cols = r.shape
    pivots = []
    lead = 0
    for col in range(cols):
        if lead >= rows:
            break
        nz = np.nonzero(r[lead:, col])[0]
        if nz.size == 0:
            continue
        p = lead + int(nz[0])
        if p != lead:
            r[[lead, p]] = r[[p, lead]]
        # Columns before `col` are already reduced and vanish on row `lead`,
        # so elimination only needs to touch the trailing block.
        r[lead, col:] = field.mul(r[lead, col:],
                                  field.inv(int(r[lead, col])))
        factors = r[:, col].copy()
        factors[lead] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            r[hit, col:] = field.sub(
                r[hit, col:],
                field.mul(factors[hit, None], r[lead, col:][None, :]))
        pivots.append(col)
        lead += 1
    return r, pivots


def rank(m) -> int:
    field, arr = _unpack(m)
    if arr.size == 0:
        return 0
    _, pivots = row_echelon(field, arr)
    return len(pivots)


def kernel_basis(m):
    """Basis of the right null space {v : m v = 0}, as a list of 1-D arrays."""
    field, arr = _unpack(m)
    cols = arr.shape[1]
    if cols == 0:
        return []
    if arr.shape[0] == 0:
        return [_unit_vector(field, cols, j) for j in range(cols)]
    r, pivots = row_echelon(field, arr)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for j in free:
        v = np.zeros(cols, dtype=np.int64)
        v[j] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(r[i, j])
        basis.append(v)
    return basis


def solve(m, b):
    """One solution x of m x = b, or NoSolution."""
    field, arr = _unpack(m)
    b = field.check(np.asarray(b, dtype=np.int64).ravel())
    if b.shape[0] != arr.shape[0]:
        raise FieldError("rhs length %d != rows %d" % (b.shape[0], arr.shape[0]))
    aug = np.concatenate([arr, b[:, None]], axis=1)
    r, pivots = row_echelon(field, aug)
    if arr.shape[1] in pivots:
        return NoSolution()
    x = np.zeros(arr.shape[1], dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, -1]
    return x


def _unit_vector(field, n, j):
    v = np.zeros(n, dtype=np.int64)
    v[j] = field.one
    return v


def _unpack(m):
    if isinstance(m, Matrix):
        return m.field, m.entries
    raise TypeError("expected a Matrix; raw arrays go through row_echelon directly")


# -- internal helpers used by the module-category engine -------------------
# These accept raw numpy arrays plus an explicit field, avoiding Matrix
# wrapper overhead in hot loops.


def nullspace(field: FieldSpec, arr: np.ndarray):
    """Kernel basis of a raw coefficient array, as a (k x cols) array."""
    arr = np.asarray(arr, dtype=np.int64)
    cols = arr.shape[1]
    if arr.shape[0] == 0 or arr.size == 0:
        return field.eye(cols) if cols else np.zeros((0, 0), dtype=np.int64)
    r, pivots = row_echelon(field, arr)
    free = [j for j in range(cols) if j not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = field.one
        for i, pc in enumerate(pivots):
            out[t, pc] = field.neg(r[i, j])
    return out


def row_space_basis(field: FieldSpec, arr: np.ndarray) -> np.ndarray:
    """Independent rows spanning the row space, in echelon form."""
    arr = np.asarray(arr, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, arr.shape[1] if arr.ndim == 2 else 0), dtype=np.int64)
    r, pivots = row_echelon(field, arr)
    return r[: len(pivots)]


def solve_raw(field: FieldSpec, arr: np.ndarray, rhs: np.ndarray):
    """Solve arr x = rhs for a 1-D or 2-D rhs; None if inconsistent."""
    rhs = np.asarray(rhs, dtype=np.int64)
    one_d = rhs.ndim == 1
    if one_d:
        rhs = rhs[:, None]
    ncols = arr.shape[1]
    aug = np.concatenate([arr, rhs], axis=1)
    r, pivots = row_echelon(field, aug)
    if any(p >= ncols for p in pivots):
        return None
    x = np.zeros((ncols, rhs.shape[1]), dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, ncols:]
    return x[:, 0] if one_d else x


def in_row_space(field: FieldSpec, basis: np.ndarray, vec: np.ndarray) -> bool:
    return solve_raw(field, basis.T, vec) is not None


def is_invertible(field: FieldSpec, arr: np.ndarray) -> bool:
    arr = np.asarray(arr)
    return arr.shape[0] == arr.shape[1] and rank_raw(field, arr) == arr.shape[0]


def rank_raw(field: FieldSpec, arr: np.ndarray) -> int:
    arr = np.asarray(arr, dtype=np.int64)
    if arr.size == 0:
        return 0
    _, pivots = row_echelon(field, arr)
    return len(pivots)


def invert(field: FieldSpec, arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    sol = solve_raw(field, np.asarray(arr, dtype=np.int64), field.eye(n))
    if sol is None or rank_raw(field, arr) < n:
        raise FieldError("matrix not invertible")
    return sol
