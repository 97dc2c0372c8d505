"""Finite-dimensional based algebras: construction and validation.

An algebra is given concretely by a basis, structure constants, a unit, a
complete set of pairwise orthogonal primitive idempotents and a generating
set of its Jacobson radical.  Builders are provided for bound-quiver
presentations (with path rewriting) and for Nakayama algebras given by a
Kupisch series.

Convention: module elements are row vectors of coordinates, and every
linear map acts by right multiplication.  For an element x of the algebra,
``L(x)`` is the matrix of left multiplication by x (v -> coords of x*v) and
``R(x)`` the matrix of right multiplication (v -> coords of v*x).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .linalg import FieldSpec
from . import nakayama as nak

__all__ = [
    "AlgebraPresentation",
    "BasedAlgebra",
    "QuiverPresentation",
    "ValidationError",
    "RewritingDiverged",
    "NotFiniteDimensional",
    "validate",
    "from_quiver",
    "from_kupisch",
    "opposite",
    "cartan_matrix",
    "is_symmetric",
    "SymmetryResult",
    "corner_algebra",
    "CornerData",
]


class ValidationError(ValueError):
    """A presentation axiom failed; ``code`` and ``witness`` locate it."""

    def __init__(self, code: str, witness=None, message: str = ""):
        self.code = code
        self.witness = witness
        super().__init__("%s%s%s" % (code, " at %r" % (witness,) if witness is not None else "",
                                     ": " + message if message else ""))


class RewritingDiverged(RuntimeError):
    pass


class NotFiniteDimensional(RuntimeError):
    pass


@dataclass
class AlgebraPresentation:
    field: FieldSpec
    basis_labels: list
    mult: np.ndarray          # shape (n, n, n); mult[i, j] = coords of b_i * b_j
    unit: np.ndarray          # shape (n,)
    idempotents: np.ndarray   # shape (k, n)
    radical_generators: np.ndarray  # shape (r, n)

    def __post_init__(self):
        n = len(self.basis_labels)
        self.mult = self.field.check(np.asarray(self.mult, dtype=np.int64))
        self.unit = self.field.check(np.asarray(self.unit, dtype=np.int64))
        self.idempotents = self.field.check(
            np.asarray(self.idempotents, dtype=np.int64).reshape(-1, n))
        rg = np.asarray(self.radical_generators, dtype=np.int64)
        self.radical_generators = self.field.check(rg.reshape(-1, n) if rg.size else rg.reshape(0, n))
        if self.mult.shape != (n, n, n) or self.unit.shape != (n,):
            raise ValidationError("BadShape", None, "structure constant dimensions")


class BasedAlgebra:
    """A validated presentation with derived caches.

    Not built directly; use :func:`validate` or one of the builders.
    """

    def __init__(self, pres: AlgebraPresentation, *, _token=None):
        if _token is not _VALIDATED:
            raise TypeError("use validate() to build a BasedAlgebra")
        self.pres = pres
        self.field = pres.field
        self.dim = len(pres.basis_labels)
        self.basis_labels = list(pres.basis_labels)
        self.mult = pres.mult
        self.unit = pres.unit
        self.idempotents = pres.idempotents
        self.n_idem = pres.idempotents.shape[0]
        self.radical_generators = pres.radical_generators
        # filled during validation
        self.jacobson_basis = None   # rows spanning the radical ideal
        self.cartan = None           # integer matrix, entry (i,j) = dim e_i A e_j
        self.connected = None
        self.warnings = []
        self._sym_cache = {}
        self.nak_bridge = None       # set by from_kupisch

    # -- element arithmetic ------------------------------------------------

    def L(self, x: np.ndarray) -> np.ndarray:
        """Left multiplication matrix of the element with coordinates x."""
        out = self.field.zeros(self.dim, self.dim)
        for i in np.nonzero(np.asarray(x))[0]:
            out = self.field.add(out, self.field.mul(int(x[i]), self.mult[i]))
        return out

    def R(self, x: np.ndarray) -> np.ndarray:
        out = self.field.zeros(self.dim, self.dim)
        for j in np.nonzero(np.asarray(x))[0]:
            out = self.field.add(out, self.field.mul(int(x[j]), self.mult[:, j, :]))
        return out

    def elem_mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.field.matmul(np.asarray(y, dtype=np.int64)[None, :], self.L(x))[0]

    def basis_right_mult(self, j: int) -> np.ndarray:
        """Matrix of v -> v * b_j on the regular module (row convention)."""
        return self.mult[:, j, :]

    def basis_left_mult(self, i: int) -> np.ndarray:
        return self.mult[i]

    def __repr__(self):
        return "BasedAlgebra(dim=%d, idem=%d, %r)" % (self.dim, self.n_idem, self.field)


_VALIDATED = object()


def validate(pres: AlgebraPresentation) -> BasedAlgebra:
    """Check all presentation axioms; return the algebra with caches filled.

    Non-connected or semisimple input yields a warning, not an error, since
    those are soundness-of-theory assumptions rather than well-formedness.
    """
    f = pres.field
    n = len(pres.basis_labels)
    alg = BasedAlgebra(pres, _token=_VALIDATED)

    # associativity: left and right multiplications commute
    L = [pres.mult[i] for i in range(n)]
    R = [pres.mult[:, k, :] for k in range(n)]
    for i in range(n):
        for k in range(n):
            if not np.array_equal(f.matmul(L[i], R[k]), f.matmul(R[k], L[i])):
                j = _assoc_witness(alg, i, k)
                raise ValidationError("NonAssociative", (i, j, k))

    if not (np.array_equal(alg.L(pres.unit), f.eye(n))
            and np.array_equal(alg.R(pres.unit), f.eye(n))):
        raise ValidationError("BadUnit")

    idem = pres.idempotents
    k = idem.shape[0]
    for a in range(k):
        for b in range(k):
            prod = alg.elem_mul(idem[a], idem[b])
            want = idem[a] if a == b else np.zeros(n, dtype=np.int64)
            if not np.array_equal(prod, want):
                raise ValidationError("BadIdempotents", (a, b))
    total = np.zeros(n, dtype=np.int64)
    for a in range(k):
        total = f.add(total, idem[a])
    if not np.array_equal(total, pres.unit):
        raise ValidationError("BadIdempotents", None, "idempotents do not sum to the unit")

    jac = _ideal_closure(alg, pres.radical_generators)
    if jac.shape[0] and linalg.in_row_space(f, jac, pres.unit):
        raise ValidationError("RadicalNotIdeal", None, "radical ideal contains the unit")
    if not _is_nilpotent_ideal(alg, jac):
        raise ValidationError("RadicalNotNilpotent")
    # elementary semisimple quotient: A = span(e_i) + J with independent images
    stack = np.concatenate([idem, jac], axis=0) if jac.size else idem
    if k + jac.shape[0] != n or linalg.rank_raw(f, stack) != n:
        raise ValidationError("QuotientNotSemisimple",
                              (k, int(jac.shape[0]), n))
    alg.jacobson_basis = jac

    cart = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        la = alg.L(idem[a])
        for b in range(k):
            cart[a, b] = linalg.rank_raw(f, f.matmul(la, alg.R(idem[b])))
    alg.cartan = cart

    adj = (cart + cart.T) > 0
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in range(k):
            if adj[v, w] and w not in seen:
                seen.add(w)
                frontier.append(w)
    alg.connected = len(seen) == k
    if not alg.connected:
        alg.warnings.append("not connected")
    if jac.shape[0] == 0:
        alg.warnings.append("semisimple")
    return alg


def _assoc_witness(alg, i, k):
    f = alg.field
    for j in range(alg.dim):
        lhs = alg.elem_mul(alg.mult[i, j], _basis_vec(alg, k, f))
        rhs = alg.elem_mul(_basis_vec(alg, i, f), alg.mult[j, k])
        if not np.array_equal(lhs, rhs):
            return j
    return -1


def _basis_vec(alg, i, f):
    v = np.zeros(alg.dim, dtype=np.int64)
    v[i] = f.one
    return v


def _ideal_closure(alg, rows) -> np.ndarray:
    """Row basis of the two-sided ideal generated by the given elements."""
    f = alg.field
    basis = linalg.row_space_basis(f, rows)
    while True:
        prev = basis.shape[0]
        if prev == 0:
            return basis
        new = [basis]
        for j in range(alg.dim):
            new.append(f.matmul(basis, alg.mult[:, j, :]))   # right mult by b_j
            new.append(f.matmul(basis, alg.mult[j]))          # left mult by b_j
        basis = linalg.row_space_basis(f, np.concatenate(new, axis=0))
        if basis.shape[0] == prev:
            return basis


def _is_nilpotent_ideal(alg, jac) -> bool:
    f = alg.field
    power = jac
    for _ in range(alg.dim + 1):
        if power.shape[0] == 0:
            return True
        prods = [f.matmul(power, alg.L(jac[t])) for t in range(jac.shape[0])]
        nxt = linalg.row_space_basis(f, np.concatenate(prods, axis=0)) if prods else power[:0]
        if nxt.shape[0] >= power.shape[0]:
            return False
        power = nxt
    return power.shape[0] == 0


# ---------------------------------------------------------------------------
# Bound quiver presentations


@dataclass
class QuiverPresentation:
    """A quiver with admissible relations.

    Paths are written left to right (a path p followed by q is pq), as
    tuples of arrow indices; the empty path at a vertex is ('v', index).
    Relations are lists of (coefficient code, path) pairs of parallel paths
    of length >= 2.
    """

    vertices: list
    arrows: list                      # (source, target, label)
    relations: list
    max_steps: int = 10_000
    max_path_len: int = 64

    def source(self, path):
        if path[0] == "v":
            return path[1]
        return self.arrows[path[0]][0]

    def target(self, path):
        if path[0] == "v":
            return path[1]
        return self.arrows[path[-1]][1]

    def check_admissible(self):
        for rel in self.relations:
            if not rel:
                raise ValidationError("BadRelation", rel, "empty relation")
            srcs = {self.source(p) for _, p in rel}
            tgts = {self.target(p) for _, p in rel}
            if len(srcs) != 1 or len(tgts) != 1:
                raise ValidationError("BadRelation", rel, "paths not parallel")
            for _, p in rel:
                if p[0] == "v" or len(p) < 2:
                    raise ValidationError("BadRelation", rel, "path of length < 2")


def _path_key(q: QuiverPresentation, path):
    return (len(path), tuple(q.arrows[a][2] for a in path))


class _Rewriter:
    """Path rewriting with critical-pair completion.

    Each rule sends its leading path (maximal under length-then-label-lex)
    to a combination of smaller paths.  Completion adds rules from
    unresolved overlaps so that normal forms are well defined; the final
    associativity check in validate() certifies the outcome independently.
    """

    def __init__(self, q: QuiverPresentation):
        self.q = q
        self.f = None  # set in build()
        self.rules = {}
        self.steps = 0

    def _bump(self):
        self.steps += 1
        if self.steps > self.q.max_steps:
            raise RewritingDiverged(self.q.max_steps)

    def _combo_sub(self, a: dict, b: dict):
        out = dict(a)
        for p, c in b.items():
            out[p] = int(self.f.sub(out.get(p, 0), c))
            if out[p] == 0:
                del out[p]
        return out

    def add_relation(self, rel):
        combo = {}
        for c, p in rel:
            combo[tuple(p)] = int(self.f.add(combo.get(tuple(p), 0), c))
        self._add_rule(self.reduce(combo))

    def _add_rule(self, combo):
        combo = {p: c for p, c in combo.items() if c != 0}
        if not combo:
            return False
        lead = max(combo, key=lambda p: _path_key(self.q, p))
        inv = self.f.inv(combo[lead])
        rhs = {p: int(self.f.neg(self.f.mul(inv, c)))
               for p, c in combo.items() if p != lead}
        self.rules[lead] = rhs
        return True

    def reduce(self, combo: dict) -> dict:
        changed = True
        while changed:
            changed = False
            for p in list(combo):
                c = combo.get(p, 0)
                if c == 0:
                    continue
                hit = self._find_redex(p)
                if hit is None:
                    continue
                self._bump()
                i, lead = hit
                del combo[p]
                pre, post = p[:i], p[i + len(lead):]
                for rp, rc in self.rules[lead].items():
                    newp = pre + rp + post
                    combo[newp] = int(self.f.add(combo.get(newp, 0),
                                                 self.f.mul(c, rc)))
                    if combo[newp] == 0:
                        del combo[newp]
                changed = True
                break
        return combo

    def _find_redex(self, p):
        for lead in self.rules:
            L = len(lead)
            for i in range(len(p) - L + 1):
                if p[i:i + L] == lead:
                    return i, lead
        return None

    def complete(self):
        while True:
            new_rules = []
            leads = list(self.rules)
            for u, v in itertools.product(leads, leads):
                for k in range(1, min(len(u), len(v))):
                    if u[-k:] != v[:k]:
                        continue
                    # overlap word u + v[k:] reduces two ways
                    word = u + v[k:]
                    left = {u + v[k:]: self.f.one}
                    a = {p + v[k:]: c for p, c in self.rules[u].items()}
                    b = {u[:-k] + p: c for p, c in self.rules[v].items()}
                    spoly = self.reduce(self._combo_sub(a, b))
                    if spoly:
                        new_rules.append(spoly)
                    del word, left
            added = False
            for spoly in new_rules:
                spoly = self.reduce(spoly)
                if self._add_rule(spoly):
                    added = True
            if not added:
                return

    def normal_paths(self):
        q = self.q
        level = [("v", i) for i in range(len(q.vertices))]
        out = list(level)
        length = 0
        by_target = {}
        for idx, (s, t, _) in enumerate(q.arrows):
            by_target.setdefault(s, []).append(idx)
        while level:
            length += 1
            if length > q.max_path_len:
                raise NotFiniteDimensional(q.max_path_len)
            nxt = []
            for p in level:
                tgt = q.target(p)
                for a in by_target.get(tgt, []):
                    new = (a,) if p[0] == "v" else p + (a,)
                    if self._find_redex(new) is None:
                        nxt.append(new)
            out.extend(nxt)
            level = nxt
        return out


def from_quiver(q: QuiverPresentation, field: FieldSpec) -> AlgebraPresentation:
    """Bound quiver algebra as a based presentation.

    The basis consists of the rewriting normal-form paths; the subsequent
    validate() call certifies that rewriting was confluent on this input.
    """
    q.check_admissible()
    rw = _Rewriter(q)
    rw.f = field
    for rel in q.relations:
        rw.add_relation(rel)
    rw.complete()
    paths = rw.normal_paths()
    paths.sort(key=lambda p: (q.source(p), len(p) if p[0] != "v" else 0,
                              _path_key(q, p) if p[0] != "v" else (0, ())))
    index = {p: i for i, p in enumerate(paths)}
    n = len(paths)
    mult = np.zeros((n, n, n), dtype=np.int64)
    for p in paths:
        for r in paths:
            if q.target(p) != q.source(r):
                continue
            if p[0] == "v":
                word = r
            elif r[0] == "v":
                word = p
            else:
                word = p + r
            combo = rw.reduce({word: field.one})
            for w, c in combo.items():
                mult[index[p], index[r], index[w]] = c
    unit = np.zeros(n, dtype=np.int64)
    idem = []
    for i in range(len(q.vertices)):
        unit[index[("v", i)]] = field.one
        e = np.zeros(n, dtype=np.int64)
        e[index[("v", i)]] = field.one
        idem.append(e)
    radgens = []
    for a in range(len(q.arrows)):
        v = np.zeros(n, dtype=np.int64)
        v[index[(a,)]] = field.one
        radgens.append(v)
    labels = ["e%s" % q.vertices[p[1]] if p[0] == "v"
              else "".join(q.arrows[a][2] for a in p) for p in paths]
    pres = AlgebraPresentation(field, labels, mult, unit,
                               np.array(idem), np.array(radgens).reshape(len(radgens), n))
    pres.path_index = {p: index[p] for p in paths}
    return pres


# ---------------------------------------------------------------------------
# Nakayama algebras from Kupisch series


def from_kupisch(series, field: FieldSpec) -> BasedAlgebra:
    """Based algebra of the connected Nakayama algebra with the given series.

    Basis paths are pairs (start vertex i, length t) with t < c_i; the
    returned algebra carries a ``nak_bridge`` attribute mapping those pairs
    to basis indices, which modrep uses to realise Nakayama modules.
    """
    if not isinstance(series, nak.NakAlgebra):
        raise TypeError("expected a NakAlgebra from nakayama.validate_kupisch")
    n_v = series.n
    c = series.c
    cyclic = series.cyclic
    paths = [(i, t) for i in range(n_v) for t in range(c[i])]
    index = {p: k for k, p in enumerate(paths)}
    n = len(paths)
    mult = np.zeros((n, n, n), dtype=np.int64)
    for (i, t) in paths:
        end = (i + t) % n_v if cyclic else i + t
        for (j, s) in paths:
            if j != end:
                continue
            if t + s < c[i]:
                mult[index[(i, t)], index[(j, s)], index[(i, t + s)]] = field.one
    unit = np.zeros(n, dtype=np.int64)
    idem = np.zeros((n_v, n), dtype=np.int64)
    for i in range(n_v):
        unit[index[(i, 0)]] = field.one
        idem[i, index[(i, 0)]] = field.one
    radgens = []
    for i in range(n_v):
        if c[i] >= 2:
            v = np.zeros(n, dtype=np.int64)
            v[index[(i, 1)]] = field.one
            radgens.append(v)
    labels = ["p%d.%d" % p for p in paths]
    pres = AlgebraPresentation(field, labels, mult, unit, idem,
                               np.array(radgens).reshape(len(radgens), n))
    alg = validate(pres)
    alg.nak_bridge = {"series": series, "path_index": index}
    return alg


# ---------------------------------------------------------------------------
# Derived constructions


def opposite(a: BasedAlgebra) -> BasedAlgebra:
    """Same basis, transposed structure constants; an involution."""
    mult_op = a.mult.transpose(1, 0, 2).copy()
    pres = AlgebraPresentation(a.field, list(a.basis_labels), mult_op,
                               a.unit.copy(), a.idempotents.copy(),
                               a.radical_generators.copy())
    return validate(pres)


def cartan_matrix(a: BasedAlgebra) -> np.ndarray:
    return a.cartan.copy()


@dataclass
class SymmetryResult:
    symmetric: bool
    certain: bool          # False only for a non-exhaustive negative
    form: np.ndarray | None

    def __bool__(self):
        return self.symmetric


def is_symmetric(a: BasedAlgebra, seed: int = 0) -> SymmetryResult:
    """Search for a nondegenerate central linear form.

    The space of central forms is exact; nondegeneracy is tested on the
    basis, then on seeded random combinations, then exhaustively when the
    search space has at most 2^20 points.
    """
    if seed in a._sym_cache:
        return a._sym_cache[seed]
    f = a.field
    n = a.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            rows.append(f.sub(a.mult[i, j], a.mult[j, i]))
    central = linalg.nullspace(f, np.array(rows).reshape(-1, n)) if rows else f.eye(n)
    res = SymmetryResult(False, True, None)
    grams = [_gram(a, lam) for lam in central]

    def nondegenerate(coeffs):
        g = f.zeros(n, n)
        for t, ct in enumerate(coeffs):
            if ct:
                g = f.add(g, f.mul(int(ct), grams[t]))
        return linalg.rank_raw(f, g) == n

    c = central.shape[0]
    for t in range(c):
        e = np.zeros(c, dtype=np.int64)
        e[t] = f.one
        if nondegenerate(e):
            res = SymmetryResult(True, True, central[t].copy())
            break
    if not res.symmetric and c:
        rng = np.random.default_rng(seed)
        for _ in range(1000):
            coeffs = rng.integers(0, f.order, size=c)
            if nondegenerate(coeffs):
                lam = _combine(f, central, coeffs)
                res = SymmetryResult(True, True, lam)
                break
    if not res.symmetric and c and f.order ** c <= 1 << 20:
        for coeffs in itertools.product(range(f.order), repeat=c):
            if any(coeffs) and nondegenerate(np.array(coeffs, dtype=np.int64)):
                lam = _combine(f, central, np.array(coeffs, dtype=np.int64))
                res = SymmetryResult(True, True, lam)
                break
        else:
            res = SymmetryResult(False, True, None)
    elif not res.symmetric:
        res = SymmetryResult(False, False, None)   # probably false
    a._sym_cache[seed] = res
    return res


def _gram(a, lam):
    f = a.field
    g = f.zeros(a.dim, a.dim)
    for k in np.nonzero(lam)[0]:
        g = f.add(g, f.mul(int(lam[k]), a.mult[:, :, k]))
    return g


def _combine(f, rows, coeffs):
    out = np.zeros(rows.shape[1], dtype=np.int64)
    for t, ct in enumerate(coeffs):
        if ct:
            out = f.add(out, f.mul(int(ct), rows[t]))
    return out


@dataclass
class CornerData:
    algebra: BasedAlgebra
    parent: BasedAlgebra
    idem_subset: tuple
    basis_rows: np.ndarray   # corner basis as elements of the parent
    projector: np.ndarray    # x -> e x e on the parent


def corner_algebra(a: BasedAlgebra, idem_subset) -> CornerData:
    """The algebra eAe for e the sum of the selected idempotents."""
    sel = sorted(set(idem_subset))
    if not sel:
        raise ValidationError("BadIdempotents", sel, "empty idempotent subset")
    f = a.field
    e = np.zeros(a.dim, dtype=np.int64)
    for i in sel:
        e = f.add(e, a.idempotents[i])
    proj = f.matmul(a.L(e), a.R(e))
    rows = linalg.row_space_basis(f, proj)
    m = rows.shape[0]
    mult = np.zeros((m, m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            prod = a.elem_mul(rows[i], rows[j])
            coords = linalg.solve_raw(f, rows.T, prod)
            mult[i, j] = coords
    unit = linalg.solve_raw(f, rows.T, e)
    idem = np.array([linalg.solve_raw(f, rows.T, a.idempotents[i]) for i in sel])
    radrows = f.matmul(a.jacobson_basis, proj) if a.jacobson_basis.size else a.jacobson_basis
    radrows = linalg.row_space_basis(f, radrows)
    radgens = np.array([linalg.solve_raw(f, rows.T, r) for r in radrows]).reshape(-1, m)
    labels = ["c%d" % i for i in range(m)]
    pres = AlgebraPresentation(f, labels, mult, unit, idem, radgens)
    return CornerData(validate(pres), a, tuple(sel), rows, proj)
