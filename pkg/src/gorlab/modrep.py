"""Module-category engine over a BasedAlgebra.

Modules are finite dimensional right modules: elements are row vectors and
each algebra basis element acts by right multiplication with a matrix, so
action(b_i) @ action(b_j) = sum_k c^k_ij action(b_k).  Left modules are
handled as right modules over the opposite algebra; the duality D sends a
right module M to the right opposite(A)-module on the transposed matrices.

Maps f: M -> N are stored as dim(M) x dim(N) matrices acting by
v -> v @ F, so composition "f then g" is F @ G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .algebra import BasedAlgebra, AlgebraPresentation, validate, opposite
from .dims import HomologicalDim, PeriodicityCertificate

__all__ = [
    "RightModule",
    "ModuleMap",
    "AlgebraMismatch",
    "DecompositionInconclusive",
    "make_module",
    "zero_module",
    "regular_module",
    "projectives",
    "simples",
    "injectives",
    "direct_sum",
    "submodule_from_rows",
    "quotient_by_rows",
    "hom_basis",
    "structure",
    "projective_cover",
    "injective_hull",
    "syzygy",
    "cosyzygy",
    "ext_dim",
    "stable_hom_dim",
    "dual",
    "nu",
    "nu_inv",
    "transpose_tr",
    "tau",
    "tau_inv",
    "iso",
    "IsoResult",
    "decompose",
    "in_add",
    "min_right_approx",
    "resdim",
    "coresdim",
    "endo_algebra",
    "EndoData",
    "hom_functor",
    "bridge_module",
    "corner_restrict",
    "opp",
]


class AlgebraMismatch(ValueError):
    pass


class DecompositionInconclusive(RuntimeError):
    pass


@dataclass(eq=False)
class RightModule:
    algebra: BasedAlgebra
    dim: int
    action: np.ndarray          # (algebra.dim, dim, dim)
    label: str = ""
    indec_certain: bool | None = None   # set by decompose on its outputs

    def rho(self, x: np.ndarray) -> np.ndarray:
        """Action matrix of an arbitrary algebra element (coordinates x)."""
        f = self.algebra.field
        out = f.zeros(self.dim, self.dim)
        for j in np.nonzero(np.asarray(x))[0]:
            out = f.add(out, f.mul(int(x[j]), self.action[j]))
        return out

    def __repr__(self):
        return "RightModule(dim=%d%s)" % (self.dim,
                                          ", %s" % self.label if self.label else "")


@dataclass(eq=False)
class ModuleMap:
    source: RightModule
    target: RightModule
    matrix: np.ndarray          # (source.dim, target.dim), v -> v @ matrix

    def then(self, other: "ModuleMap") -> "ModuleMap":
        if other.source is not self.target:
            if other.source.dim != self.target.dim:
                raise AlgebraMismatch("composition shape mismatch")
        f = self.source.algebra.field
        return ModuleMap(self.source, other.target,
                         f.matmul(self.matrix, other.matrix))

    def is_iso(self) -> bool:
        return (self.source.dim == self.target.dim
                and linalg.is_invertible(self.source.algebra.field, self.matrix))


def _check_intertwines(mp: ModuleMap):
    a = mp.source.algebra
    f = a.field
    gens = np.concatenate([a.idempotents, a.radical_generators], axis=0)
    for g in gens:
        lhs = f.matmul(mp.source.rho(g), mp.matrix)
        rhs = f.matmul(mp.matrix, mp.target.rho(g))
        if not np.array_equal(lhs, rhs):
            raise ValueError("map does not intertwine the action")


def make_module(a: BasedAlgebra, action, label: str = "", check: bool = True) -> RightModule:
    f = a.field
    action = f.check(np.asarray(action, dtype=np.int64))
    dim = action.shape[1] if action.ndim == 3 else 0
    if action.shape != (a.dim, dim, dim):
        raise ValueError("action must be one dim x dim matrix per basis element")
    m = RightModule(a, dim, action, label)
    if check and dim:
        if not np.array_equal(m.rho(a.unit), f.eye(dim)):
            raise ValueError("unit does not act as identity")
        for i in range(a.dim):
            for j in range(a.dim):
                if not np.array_equal(f.matmul(action[i], action[j]),
                                      m.rho(a.mult[i, j])):
                    raise ValueError("action violates structure constants at (%d,%d)" % (i, j))
    return m


def zero_module(a: BasedAlgebra) -> RightModule:
    return RightModule(a, 0, np.zeros((a.dim, 0, 0), dtype=np.int64), "0")


def regular_module(a: BasedAlgebra) -> RightModule:
    return RightModule(a, a.dim, a.mult.transpose(1, 0, 2).copy(), "A")


def opp(a: BasedAlgebra) -> BasedAlgebra:
    """Cached opposite algebra; opp(opp(a)) is a itself."""
    cached = getattr(a, "_opp", None)
    if cached is None:
        cached = opposite(a)
        a._opp = cached
        cached._opp = a
    return cached


def direct_sum(mods) -> tuple:
    """(sum, injections, projections)."""
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    a = mods[0].algebra
    if any(m.algebra is not a for m in mods):
        raise AlgebraMismatch("summands over different algebras")
    total = sum(m.dim for m in mods)
    action = np.zeros((a.dim, total, total), dtype=np.int64)
    offs = []
    pos = 0
    for m in mods:
        action[:, pos:pos + m.dim, pos:pos + m.dim] = m.action
        offs.append(pos)
        pos += m.dim
    s = RightModule(a, total, action,
                    "+".join(m.label for m in mods) if all(m.label for m in mods) else "")
    injs, projs = [], []
    for m, o in zip(mods, offs):
        inj = np.zeros((m.dim, total), dtype=np.int64)
        prj = np.zeros((total, m.dim), dtype=np.int64)
        for r in range(m.dim):
            inj[r, o + r] = a.field.one
            prj[o + r, r] = a.field.one
        injs.append(ModuleMap(m, s, inj))
        projs.append(ModuleMap(s, m, prj))
    return s, injs, projs


def submodule_from_rows(m: RightModule, rows, close: bool = True,
                        label: str = "") -> tuple:
    """(submodule, inclusion map) spanned by the given row vectors."""
    f = m.algebra.field
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, m.dim)
    basis = linalg.row_space_basis(f, rows)
    if close:
        while True:
            prev = basis.shape[0]
            if prev == 0:
                break
            imgs = [basis] + [f.matmul(basis, m.action[j])
                              for j in range(m.algebra.dim)]
            basis = linalg.row_space_basis(f, np.concatenate(imgs, axis=0))
            if basis.shape[0] == prev:
                break
    r = basis.shape[0]
    action = np.zeros((m.algebra.dim, r, r), dtype=np.int64)
    for j in range(m.algebra.dim):
        img = f.matmul(basis, m.action[j])
        coords = linalg.solve_raw(f, basis.T, img.T)
        if coords is None:
            raise ValueError("rows do not span an action-stable subspace")
        action[j] = coords.T
    sub = RightModule(m.algebra, r, action, label)
    return sub, ModuleMap(sub, m, basis)


def quotient_by_rows(m: RightModule, rows, label: str = "") -> tuple:
    """(quotient, projection map) by the action-stable span of rows."""
    f = m.algebra.field
    if m.dim == 0:
        quo = RightModule(m.algebra, 0,
                          np.zeros((m.algebra.dim, 0, 0), dtype=np.int64), label)
        return quo, ModuleMap(m, quo, np.zeros((0, 0), dtype=np.int64))
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, m.dim)
    basis = linalg.row_space_basis(f, rows)
    r = basis.shape[0]
    _, pivots = linalg.row_echelon(f, basis) if r else (None, [])
    comp = [j for j in range(m.dim) if j not in pivots]
    q = len(comp)
    T = np.zeros((m.dim, m.dim), dtype=np.int64)
    T[:r] = basis
    for t, j in enumerate(comp):
        T[r + t, j] = f.one
    Tinv = linalg.invert(f, T)
    proj = Tinv[:, r:]                         # v -> coset coordinates
    E = np.zeros((q, m.dim), dtype=np.int64)   # coset representatives
    for t, j in enumerate(comp):
        E[t, j] = f.one
    action = np.zeros((m.algebra.dim, q, q), dtype=np.int64)
    for j in range(m.algebra.dim):
        action[j] = f.matmul(f.matmul(E, m.action[j]), proj)
    quo = RightModule(m.algebra, q, action, label)
    return quo, ModuleMap(m, quo, proj)


# ---------------------------------------------------------------------------
# Hom spaces


def _field_kron(f, A, B):
    out = f.mul(np.asarray(A, dtype=np.int64)[:, None, :, None],
                np.asarray(B, dtype=np.int64)[None, :, None, :])
    return out.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def hom_basis(m: RightModule, n: RightModule) -> list:
    """Basis of the intertwiner space Hom_A(m, n) as ModuleMaps.

    Constraints are imposed only for the idempotents and radical
    generators, which generate the algebra multiplicatively.
    """
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules over different algebras")
    a = m.algebra
    f = a.field
    if m.dim == 0 or n.dim == 0:
        return []
    gens = np.concatenate([a.idempotents, a.radical_generators], axis=0)
    eye_n = f.eye(n.dim)
    eye_m = f.eye(m.dim)
    # Intersect the constraint kernels one generator at a time: solutions
    # are kept as coordinates in the running kernel basis, so the column
    # count shrinks after the first (idempotent) constraints instead of
    # eliminating one tall stacked system.
    basis = None
    for g in gens:
        rm = m.rho(g)
        rn = n.rho(g)
        block = f.sub(_field_kron(f, rm, eye_n),
                      _field_kron(f, eye_m, rn.T))
        if basis is None:
            basis = linalg.nullspace(f, block)
        else:
            coords = linalg.nullspace(f, f.matmul(block, basis.T))
            basis = f.matmul(coords, basis)
        if basis.shape[0] == 0:
            return []
    return [ModuleMap(m, n, v.reshape(m.dim, n.dim)) for v in basis]


def hom_dim(m: RightModule, n: RightModule) -> int:
    return len(hom_basis(m, n))


# ---------------------------------------------------------------------------
# Radical / top / socle, covers and hulls


@dataclass
class StructureData:
    radical: RightModule
    radical_inclusion: ModuleMap
    top: RightModule
    top_projection: ModuleMap
    socle: RightModule
    socle_inclusion: ModuleMap


def structure(m: RightModule) -> StructureData:
    a = m.algebra
    f = a.field
    if m.dim == 0:
        raise ValueError("structure of the zero module")
    rad_rows = [np.zeros((0, m.dim), dtype=np.int64)]
    for r in a.radical_generators:
        rad_rows.append(m.rho(r))
    rad, rad_inc = submodule_from_rows(m, np.concatenate(rad_rows, axis=0),
                                       close=True, label="rad")
    top, top_proj = quotient_by_rows(m, rad_inc.matrix, label="top")
    jb = a.jacobson_basis
    if jb.shape[0] == 0:
        soc_rows = f.eye(m.dim)
    else:
        H = np.concatenate([m.rho(j) for j in jb], axis=1)
        soc_rows = linalg.nullspace(f, H.T)
    soc, soc_inc = submodule_from_rows(m, soc_rows, close=False, label="soc")
    return StructureData(rad, rad_inc, top, top_proj, soc, soc_inc)


def projectives(a: BasedAlgebra) -> tuple:
    """(list of e_iA, regular module)."""
    cached = getattr(a, "_projectives", None)
    if cached is not None:
        return cached
    reg = regular_module(a)
    out = []
    for i in range(a.n_idem):
        sub, _ = submodule_from_rows(reg, a.L(a.idempotents[i]),
                                     close=False, label="e%dA" % i)
        sub._proj_idem = i
        out.append(sub)
    a._projectives = (out, reg)
    return out, reg


def simples(a: BasedAlgebra) -> list:
    cached = getattr(a, "_simples", None)
    if cached is not None:
        return cached
    projs, _ = projectives(a)
    out = [structure(p).top for p in projs]
    for i, s in enumerate(out):
        s.label = "S%d" % i
    a._simples = out
    return out


def injectives(a: BasedAlgebra) -> list:
    """Indecomposable injectives D(e_i A^op), socle S_i."""
    cached = getattr(a, "_injectives", None)
    if cached is not None:
        return cached
    op_projs, _ = projectives(opp(a))
    out = [dual(p) for p in op_projs]
    for i, m in enumerate(out):
        m.label = "D(Ae%d)" % i
    a._injectives = out
    return out


def top_multiplicities(m: RightModule) -> list:
    """Multiplicity of each simple S_i in top(m)."""
    a = m.algebra
    f = a.field
    t = structure(m).top
    return [linalg.rank_raw(f, t.rho(a.idempotents[i])) for i in range(a.n_idem)]


def socle_multiplicities(m: RightModule) -> list:
    a = m.algebra
    f = a.field
    s = structure(m).socle
    return [linalg.rank_raw(f, s.rho(a.idempotents[i])) for i in range(a.n_idem)]


def projective_cover(m: RightModule) -> ModuleMap:
    """Minimal surjection from a projective; kernel lies in its radical."""
    a = m.algebra
    f = a.field
    if m.dim == 0:
        return ModuleMap(zero_module(a), m, np.zeros((0, 0), dtype=np.int64))
    projs, _ = projectives(a)
    st = structure(m)
    pi = st.top_projection.matrix
    summands = []
    gen_vectors = []
    for i in range(a.n_idem):
        block = st.top.rho(a.idempotents[i])
        rows = linalg.row_space_basis(f, block)
        for u in rows:
            v = linalg.solve_raw(f, pi.T, u)
            v = f.matmul(v[None, :], m.rho(a.idempotents[i]))[0]
            summands.append(projs[i])
            gen_vectors.append((i, v))
    P, injs, _ = direct_sum(summands) if summands else (zero_module(a), [], [])
    F = np.zeros((P.dim, m.dim), dtype=np.int64)
    pos = 0
    for (i, v), sm in zip(gen_vectors, summands):
        basis_rows = None
        # e_iA basis rows are elements of A; the map sends b -> v * b
        incl = a.L(a.idempotents[i])
        sub_basis = linalg.row_space_basis(f, incl)
        for r in range(sm.dim):
            F[pos + r] = f.matmul(v[None, :], m.rho(sub_basis[r]))[0]
        pos += sm.dim
    cover = ModuleMap(P, m, F)
    cover.summand_idems = [i for i, _ in gen_vectors]
    return cover


def dual(m: RightModule) -> RightModule:
    """D(m): right module over the opposite algebra, transposed action."""
    out = RightModule(opp(m.algebra), m.dim,
                      m.action.transpose(0, 2, 1).copy(),
                      "D(%s)" % m.label if m.label else "")
    return out


def dual_map(mp: ModuleMap) -> ModuleMap:
    return ModuleMap(dual(mp.target), dual(mp.source), mp.matrix.T.copy())


def injective_hull(m: RightModule) -> ModuleMap:
    cov = projective_cover(dual(m))
    h = dual_map(cov)
    # dual(dual(m)) has the same action matrices as m; keep m as the source
    return ModuleMap(m, h.target, h.matrix)


def kernel_submodule(mp: ModuleMap) -> tuple:
    f = mp.source.algebra.field
    rows = linalg.nullspace(f, mp.matrix.T)
    return submodule_from_rows(mp.source, rows, close=False)


def cokernel_quotient(mp: ModuleMap) -> tuple:
    return quotient_by_rows(mp.target, mp.matrix)


def syzygy(m: RightModule, steps: int = 1) -> RightModule:
    cur = m
    for _ in range(steps):
        if cur.dim == 0:
            return cur
        cur, _ = kernel_submodule(projective_cover(cur))
    return cur


def cosyzygy(m: RightModule, steps: int = 1) -> RightModule:
    cur = m
    for _ in range(steps):
        if cur.dim == 0:
            return cur
        cur, _ = cokernel_quotient(injective_hull(cur))
    return cur


# ---------------------------------------------------------------------------
# Ext and stable Hom


def ext_dim(m: RightModule, n: RightModule, i: int) -> int:
    """dim Ext^i(m, n) from the minimal projective resolution of m."""
    if i < 0:
        raise ValueError("negative degree")
    if i == 0:
        return hom_dim(m, n)
    cur = m
    incl = None
    for _ in range(i):
        if cur.dim == 0:
            return 0
        cov = projective_cover(cur)
        cur, incl = kernel_submodule(cov)
        last_p = cov.source
    if cur.dim == 0:
        return 0
    f = m.algebra.field
    hb = hom_basis(cur, n)
    if not hb:
        return 0
    # maps Omega^i(m) -> n that extend to P_{i-1} are the coboundaries
    restricted = []
    for g in hom_basis(last_p, n):
        restricted.append(f.matmul(incl.matrix, g.matrix).ravel())
    rk = linalg.rank_raw(f, np.array(restricted).reshape(-1, cur.dim * n.dim)) \
        if restricted else 0
    return len(hb) - rk


def stable_hom_dim(m: RightModule, n: RightModule) -> int:
    """dim of Hom(m, n) modulo maps factoring through projectives."""
    f = m.algebra.field
    hb = hom_basis(m, n)
    if not hb:
        return 0
    projs, _ = projectives(m.algebra)
    through = []
    for p in projs:
        to_p = hom_basis(m, p)
        from_p = hom_basis(p, n)
        for u in to_p:
            for w in from_p:
                through.append(f.matmul(u.matrix, w.matrix).ravel())
    rk = linalg.rank_raw(f, np.array(through).reshape(-1, m.dim * n.dim)) \
        if through else 0
    return len(hb) - rk


# ---------------------------------------------------------------------------
# Nakayama functor, transpose, AR translate


def _flatten_mats(mats, ncols: int) -> np.ndarray:
    if not len(mats):
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array([np.asarray(m).ravel() for m in mats]).reshape(len(mats), ncols)


def _hom_to_regular(m: RightModule):
    a = m.algebra
    reg = regular_module(a)
    basis = hom_basis(m, reg)
    flats = _flatten_mats([h.matrix for h in basis], m.dim * reg.dim)
    return basis, flats


def nu(m: RightModule) -> RightModule:
    """Nakayama functor D Hom(m, A); sends e_iA to D(Ae_i)."""
    a = m.algebra
    f = a.field
    basis, flats = _hom_to_regular(m)
    h = len(basis)
    action = np.zeros((a.dim, h, h), dtype=np.int64)
    for j in range(a.dim):
        Lj = a.mult[j]          # left multiplication by b_j on row vectors
        sigma = np.zeros((h, h), dtype=np.int64)
        for t, hb in enumerate(basis):
            img = f.matmul(hb.matrix, Lj).ravel()
            sigma[t] = linalg.solve_raw(f, flats.T, img)
        action[j] = sigma.T
    return RightModule(a, h, action, "nu(%s)" % m.label if m.label else "")


def nu_map(mp: ModuleMap, nu_src: RightModule = None, nu_tgt: RightModule = None):
    """nu applied to a map; returns (nu(source), nu(target), ModuleMap)."""
    f = mp.source.algebra.field
    sb, sflat = _hom_to_regular(mp.source)
    tb, tflat = _hom_to_regular(mp.target)
    ns = nu_src if nu_src is not None else nu(mp.source)
    nt = nu_tgt if nu_tgt is not None else nu(mp.target)
    # precomposition Hom(target, A) -> Hom(source, A), then dualize
    pre = np.zeros((len(tb), len(sb)), dtype=np.int64)
    for s, hb in enumerate(tb):
        img = f.matmul(mp.matrix, hb.matrix).ravel()
        pre[s] = linalg.solve_raw(f, sflat.T, img)
    return ns, nt, ModuleMap(ns, nt, pre.T.copy())


def nu_inv(m: RightModule) -> RightModule:
    """Inverse Nakayama functor Hom_A(D(m), A) with the right A-action."""
    a = m.algebra
    f = a.field
    dm = dual(m)
    reg_op = regular_module(opp(a))
    basis = hom_basis(dm, reg_op)
    h = len(basis)
    flats = np.array([hb.matrix.ravel() for hb in basis]).reshape(h, -1)
    action = np.zeros((a.dim, h, h), dtype=np.int64)
    for j in range(a.dim):
        Rj = a.mult[:, j, :]    # right multiplication by b_j on A
        tau_j = np.zeros((h, h), dtype=np.int64)
        for t, hb in enumerate(basis):
            img = f.matmul(hb.matrix, Rj).ravel()
            tau_j[t] = linalg.solve_raw(f, flats.T, img)
        action[j] = tau_j
    return RightModule(a, h, action, "nu_inv(%s)" % m.label if m.label else "")


def minimal_presentation(m: RightModule):
    """(g: P_1 -> P_0, p: P_0 -> m) with both covers minimal."""
    p = projective_cover(m)
    k, incl = kernel_submodule(p)
    q = projective_cover(k)
    f = m.algebra.field
    g = ModuleMap(q.source, p.source, f.matmul(q.matrix, incl.matrix))
    return g, p


def transpose_tr(m: RightModule) -> RightModule:
    """Tr(m): cokernel of Hom(g, A) over the opposite algebra."""
    a = m.algebra
    f = a.field
    g, p = minimal_presentation(m)
    h0 = _HomPA(g.target)
    h1 = _HomPA(g.source)
    # f in Hom(P_0, A) -> g-then-f in Hom(P_1, A)
    mat = np.zeros((h0.dim, h1.dim), dtype=np.int64)
    for t, hb in enumerate(h0.basis):
        img = f.matmul(g.matrix, hb.matrix).ravel()
        mat[t] = linalg.solve_raw(f, h1.flats.T, img)
    mp = ModuleMap(h0.module, h1.module, mat)
    tr, _ = cokernel_quotient(mp)
    tr.label = "Tr(%s)" % m.label if m.label else ""
    return tr


class _HomPA:
    """Hom(P, A) as a right module over the opposite algebra."""

    def __init__(self, p: RightModule):
        a = p.algebra
        f = a.field
        self.basis, self.flats = _hom_to_regular(p)
        self.dim = len(self.basis)
        h = self.dim
        action = np.zeros((a.dim, h, h), dtype=np.int64)
        for j in range(a.dim):
            Lj = a.mult[j]
            sig = np.zeros((h, h), dtype=np.int64)
            for t, hb in enumerate(self.basis):
                img = f.matmul(hb.matrix, Lj).ravel()
                sig[t] = linalg.solve_raw(f, self.flats.T, img)
            action[j] = sig
        self.module = RightModule(opp(a), h, action)


def tau(m: RightModule) -> RightModule:
    """AR translate: kernel of nu(P_1) -> nu(P_0) from the minimal
    presentation (projective summands of m contribute nothing)."""
    g, _ = minimal_presentation(m)
    if g.source.dim == 0:
        return zero_module(m.algebra)
    ns, nt, ng = nu_map(g)
    t, _ = kernel_submodule(ng)
    t.label = "tau(%s)" % m.label if m.label else ""
    return t


def tau_inv(m: RightModule) -> RightModule:
    """Inverse translate Tr D; injective summands contribute nothing.

    Tr over opposite(A) lands back over A via the cached opposite."""
    out = transpose_tr(dual(m))
    out.label = "tau_inv(%s)" % m.label if m.label else ""
    return out


# ---------------------------------------------------------------------------
# Isomorphism and decomposition


@dataclass
class IsoResult:
    isomorphic: bool
    certain: bool
    witness: ModuleMap | None = None

    def __bool__(self):
        return self.isomorphic


def iso(m: RightModule, n: RightModule, seed: int = 0,
        random_budget: int = 2000) -> IsoResult:
    """Isomorphism test with witness; staged search over Hom(m, n)."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules over different algebras")
    f = m.algebra.field
    if m.dim != n.dim:
        return IsoResult(False, True)
    if m.dim == 0:
        return IsoResult(True, True,
                         ModuleMap(m, n, np.zeros((0, 0), dtype=np.int64)))
    hb = hom_basis(m, n)
    if len(hb) != len(hom_basis(n, m)):
        return IsoResult(False, True)
    for h in hb:
        if linalg.is_invertible(f, h.matrix):
            return IsoResult(True, True, h)
    k = len(hb)
    if k == 0:
        return IsoResult(False, True)
    if getattr(m, "indec_certain", False) and getattr(n, "indec_certain", False):
        # Between indecomposables the non-isomorphisms form the radical, a
        # proper subspace whenever an isomorphism exists; so any basis of a
        # hom space containing an iso already contains one.  None was found
        # above, hence the modules are certainly non-isomorphic.
        return IsoResult(False, True)
    mats = np.array([h.matrix for h in hb])
    rng = np.random.default_rng(seed)
    for _ in range(random_budget):
        coeffs = rng.integers(0, f.order, size=k)
        cand = _combine_mats(f, mats, coeffs)
        if linalg.is_invertible(f, cand):
            return IsoResult(True, True, ModuleMap(m, n, cand))
    if f.order ** k <= 1 << 16:
        for coeffs in itertools.product(range(f.order), repeat=k):
            if not any(coeffs):
                continue
            cand = _combine_mats(f, mats, np.array(coeffs, dtype=np.int64))
            if linalg.is_invertible(f, cand):
                return IsoResult(True, True, ModuleMap(m, n, cand))
        return IsoResult(False, True)
    return IsoResult(False, False)   # low confidence: search space too large


def _combine_mats(f, mats, coeffs):
    out = f.zeros(mats.shape[1], mats.shape[2])
    for t in np.nonzero(np.asarray(coeffs))[0]:
        out = f.add(out, f.mul(int(coeffs[t]), mats[t]))
    return out


def _mat_power(f, mat, e):
    out = f.eye(mat.shape[0])
    for _ in range(e):
        out = f.matmul(out, mat)
    return out


def decompose(m: RightModule, seed: int = 0) -> list:
    """Indecomposable summands via Fitting splits on random endomorphisms."""
    if m.dim == 0:
        return []
    f = m.algebra.field
    # a module with simple top (or simple socle) is local (or colocal),
    # hence indecomposable; this avoids the endomorphism search entirely
    st = structure(m)
    if st.top.dim == 1 or st.socle.dim == 1:
        m.indec_certain = True
        return [m]
    eb = hom_basis(m, m)
    k = len(eb)
    mats = np.array([h.matrix for h in eb])

    def try_split(cand):
        p = _mat_power(f, cand, m.dim)
        r = linalg.rank_raw(f, p)
        if 0 < r < m.dim:
            ker_rows = linalg.nullspace(f, p.T)
            im_rows = linalg.row_space_basis(f, p)
            stacked = np.concatenate([ker_rows, im_rows], axis=0)
            if linalg.rank_raw(f, stacked) == m.dim:
                a, _ = submodule_from_rows(m, ker_rows, close=False)
                b, _ = submodule_from_rows(m, im_rows, close=False)
                return a, b
        return None

    for t in range(k):
        sp = try_split(mats[t])
        if sp:
            return decompose(sp[0], seed) + decompose(sp[1], seed)
    rng = np.random.default_rng(seed)
    for _ in range(50):
        coeffs = rng.integers(0, f.order, size=k)
        sp = try_split(_combine_mats(f, mats, coeffs))
        if sp:
            return decompose(sp[0], seed) + decompose(sp[1], seed)
    if f.order ** k <= 1 << 16:
        for coeffs in itertools.product(range(f.order), repeat=k):
            sp = try_split(_combine_mats(f, np.array(mats),
                                         np.array(coeffs, dtype=np.int64)))
            if sp:
                return decompose(sp[0], seed) + decompose(sp[1], seed)
        m.indec_certain = True
        return [m]
    m.indec_certain = False   # budget exhausted without a certificate
    return [m]


def in_add(gens, x: RightModule, seed: int = 0) -> bool:
    """Is x a direct sum of copies of summands of the given generators?"""
    if x.dim == 0:
        return True
    gen_summands = []
    for g in gens:
        gen_summands.extend(decompose(g, seed))
    for part in decompose(x, seed):
        if not any(iso(part, gs, seed) for gs in gen_summands):
            return False
    return True


# ---------------------------------------------------------------------------
# Approximations and relative dimensions


def min_right_approx(addgens, x: RightModule, seed: int = 0) -> ModuleMap:
    """Minimal right add(⊕addgens)-approximation of x.

    Built from the universal map and pruned summand by summand; the
    result carries ``summand_gens`` (index into addgens per source copy)
    and ``minimal_certain``.
    """
    a = x.algebra
    f = a.field
    gens = list(addgens)
    hom_to_x = [hom_basis(g, x) for g in gens]
    copies = []   # (generator index, map matrix to x)
    for t, hb in enumerate(hom_to_x):
        for h in hb:
            copies.append((t, h.matrix))
    hom_between = {}
    for s in range(len(gens)):
        for t in range(len(gens)):
            hom_between[(s, t)] = [h.matrix for h in hom_basis(gens[s], gens[t])]
    target_ranks = [len(hb) for hb in hom_to_x]

    def is_approx(subset):
        for s in range(len(gens)):
            if target_ranks[s] == 0:
                continue
            flats = []
            for c in subset:
                t, F = copies[c]
                for G in hom_between[(s, t)]:
                    flats.append(f.matmul(G, F).ravel())
            arr = _flatten_mats(flats, gens[s].dim * x.dim)
            if linalg.rank_raw(f, arr) < target_ranks[s]:
                return False
        return True

    subset = list(range(len(copies)))
    changed = True
    while changed:
        changed = False
        for c in list(subset):
            trial = [d for d in subset if d != c]
            if is_approx(trial):
                subset = trial
                changed = True
    mods = [gens[copies[c][0]] for c in subset]
    if mods:
        src, _, _ = direct_sum(mods)
        F = np.concatenate([copies[c][1] for c in subset], axis=0)
    else:
        src = zero_module(a)
        F = np.zeros((0, x.dim), dtype=np.int64)
    out = ModuleMap(src, x, F)
    out.summand_gens = [copies[c][0] for c in subset]
    out.minimal_certain = _check_right_minimal(out, seed)
    return out


def _check_right_minimal(mp: ModuleMap, seed: int) -> bool:
    """Every endomorphism h of the source with h∘f = 0 must be nilpotent."""
    f = mp.source.algebra.field
    s = mp.source
    if s.dim == 0:
        return True
    eb = hom_basis(s, s)
    # solve for combinations annihilating f
    cons = _flatten_mats([f.matmul(h.matrix, mp.matrix) for h in eb],
                         s.dim * mp.target.dim)
    coeff_rows = linalg.nullspace(f, cons.T)
    if coeff_rows.shape[0] == 0:
        return True
    mats = np.array([h.matrix for h in eb])
    for row in coeff_rows:
        v = _combine_mats(f, mats, row)
        if linalg.rank_raw(f, _mat_power(f, v, s.dim)) != 0:
            return False
    rng = np.random.default_rng(seed)
    k = coeff_rows.shape[0]
    if f.order ** k <= 1 << 12:
        cand_iter = itertools.product(range(f.order), repeat=k)
    else:
        cand_iter = (tuple(rng.integers(0, f.order, size=k)) for _ in range(200))
    for coeffs in cand_iter:
        if not any(coeffs):
            continue
        comb = np.zeros(len(eb), dtype=np.int64)
        for t, ct in enumerate(coeffs):
            if ct:
                comb = f.add(comb, f.mul(int(ct), coeff_rows[t]))
        v = _combine_mats(f, mats, comb)
        if linalg.rank_raw(f, _mat_power(f, v, s.dim)) != 0:
            return False
    return True


def resdim(addgens, x: RightModule, cutoff: int = 24, seed: int = 0) -> HomologicalDim:
    """add(M)-resolution dimension with iso-certified infinity detection.

    Infinite is certified when an earlier approximation kernel recurs as a
    direct summand of a later one (with minimal approximations this forces
    the chain never to terminate).
    """
    kernels = []     # list of lists of indecomposable summands
    cur = x
    for step in range(cutoff + 1):
        if in_add(addgens, cur, seed):
            return HomologicalDim.finite(step)
        ap = min_right_approx(addgens, cur, seed)
        ker, _ = kernel_submodule(ap)
        parts = decompose(ker, seed)
        for back, old in enumerate(kernels):
            hit = _summand_embedding(old, parts, seed)
            if hit is not None:
                cert = PeriodicityCertificate("approximation-kernel",
                                              back + 1, step - back,
                                              iso=hit)
                return HomologicalDim.infinite(cert)
        kernels.append(parts)
        cur = ker
    return HomologicalDim.at_least(cutoff, "cutoff %d exhausted" % cutoff)


def _summand_embedding(old_parts, new_parts, seed):
    """Match every old summand to a distinct iso-copy among new summands."""
    used = set()
    witness = None
    for op_ in old_parts:
        found = None
        for idx, np_ in enumerate(new_parts):
            if idx in used:
                continue
            r = iso(op_, np_, seed)
            if r:
                found = idx
                witness = r.witness
                break
        if found is None:
            return None
        used.add(found)
    return witness


def coresdim(addgens, x: RightModule, cutoff: int = 24, seed: int = 0) -> HomologicalDim:
    return resdim([dual(g) for g in addgens], dual(x), cutoff, seed)


# ---------------------------------------------------------------------------
# Endomorphism algebras


@dataclass
class EndoData:
    algebra: BasedAlgebra
    summands: list                 # pairwise non-isomorphic indecomposables
    block_index: dict              # (i, j) -> list of basis positions
    block_maps: dict               # (i, j) -> list of map matrices
    idem_positions: list           # basis position of id_{X_i}


def endo_algebra(summands, seed: int = 0) -> EndoData:
    """End(⊕X_i) as a based algebra; multiplication f*g = "g then f"."""
    mods = []
    for s in summands:
        for part in decompose(s, seed):
            if not any(iso(part, m, seed) for m in mods):
                mods.append(part)
    a = mods[0].algebra
    f = a.field
    basis_maps = []     # (i, j, matrix)
    block_index = {}
    block_maps = {}
    for i, X in enumerate(mods):
        for j, Y in enumerate(mods):
            hb = hom_basis(X, Y)
            block_index[(i, j)] = list(range(len(basis_maps),
                                             len(basis_maps) + len(hb)))
            block_maps[(i, j)] = [h.matrix for h in hb]
            for h in hb:
                basis_maps.append((i, j, h.matrix))
    n = len(basis_maps)
    mult = np.zeros((n, n, n), dtype=np.int64)
    flat_cache = {}
    for key, mats in block_maps.items():
        flat_cache[key] = _flatten_mats(mats, mods[key[0]].dim * mods[key[1]].dim)
    for p, (i, j, F) in enumerate(basis_maps):
        for q, (k, l, G) in enumerate(basis_maps):
            # product F*G = "G then F": needs G to land where F starts
            if l != i:
                continue
            prod = f.matmul(G, F).ravel()
            if not block_index[(k, j)]:
                if np.any(prod):
                    raise DecompositionInconclusive("hom block closure failed")
                continue
            coords = linalg.solve_raw(f, flat_cache[(k, j)].T, prod)
            for t, pos in enumerate(block_index[(k, j)]):
                mult[p, q, pos] = coords[t]
    unit = np.zeros(n, dtype=np.int64)
    idem = np.zeros((len(mods), n), dtype=np.int64)
    idem_positions = []
    for i, X in enumerate(mods):
        eye_flat = f.eye(X.dim).ravel()
        coords = linalg.solve_raw(f, flat_cache[(i, i)].T, eye_flat)
        for t, pos in enumerate(block_index[(i, i)]):
            idem[i, pos] = coords[t]
            unit[pos] = f.add(unit[pos], coords[t])
        idem_positions.append(block_index[(i, i)])
    radgens = []
    for (i, j), positions in block_index.items():
        if i != j:
            for pos in positions:
                v = np.zeros(n, dtype=np.int64)
                v[pos] = f.one
                radgens.append(v)
        else:
            for pos, F in zip(positions, block_maps[(i, j)]):
                lam = _local_scalar(f, F, mods[i].dim)
                nil = f.sub(np.asarray(F), f.mul(lam, f.eye(mods[i].dim)))
                if np.any(nil):
                    coords = linalg.solve_raw(f, flat_cache[(i, i)].T, nil.ravel())
                    v = np.zeros(n, dtype=np.int64)
                    for t, p2 in enumerate(block_index[(i, i)]):
                        v[p2] = coords[t]
                    radgens.append(v)
    labels = ["f%d_%d_%d" % (i, j, t)
              for (i, j, _), t in zip(basis_maps, range(n))]
    pres = AlgebraPresentation(f, labels, mult, unit, idem,
                               np.array(radgens).reshape(len(radgens), n))
    B = validate(pres)
    return EndoData(B, mods, block_index, block_maps, idem)


def _local_scalar(f, F, d):
    """The scalar lambda with F - lambda*id nilpotent (End local)."""
    for lam in range(f.order):
        nil = f.sub(np.asarray(F), f.mul(lam, f.eye(d)))
        if linalg.rank_raw(f, _mat_power(f, nil, d)) == 0:
            return lam
    raise DecompositionInconclusive("endomorphism ring not local")


def hom_functor(endo: EndoData, n: RightModule) -> RightModule:
    """Hom_A(⊕X_i, n) as a right module over End(⊕X_i)."""
    B = endo.algebra
    f = B.field
    pieces = []          # (summand index, map matrix X_i -> n)
    for i, X in enumerate(endo.summands):
        for h in hom_basis(X, n):
            pieces.append((i, h.matrix))
    d = len(pieces)
    flat_by_src = {}
    for i, X in enumerate(endo.summands):
        idxs = [t for t, (s, _) in enumerate(pieces) if s == i]
        flat_by_src[i] = (idxs, _flatten_mats([pieces[t][1] for t in idxs],
                                              X.dim * n.dim))
    action = np.zeros((B.dim, d, d), dtype=np.int64)
    # B basis element pos is a map Phi: X_i -> X_j; (g . Phi) = "Phi then g"
    pos_to_block = {}
    for key, positions in endo.block_index.items():
        for t, pos in enumerate(positions):
            pos_to_block[pos] = (key[0], key[1], endo.block_maps[key][t])
    for pos in range(B.dim):
        i, j, Phi = pos_to_block[pos]
        idxs_j, _ = flat_by_src[j]
        idxs_i, flats_i = flat_by_src[i]
        for t in idxs_j:
            img = f.matmul(Phi, pieces[t][1]).ravel()
            if not idxs_i:
                if np.any(img):
                    raise DecompositionInconclusive("hom functor closure failed")
                continue
            coords = linalg.solve_raw(f, flats_i.T, img)
            for s, t2 in enumerate(idxs_i):
                action[pos, t, t2] = coords[s]
    return RightModule(B, d, action,
                       "Hom(X,%s)" % n.label if n.label else "")


def corner_restrict(corner, x: RightModule) -> RightModule:
    """x*e as a right module over the corner algebra eAe."""
    a = corner.parent
    if x.algebra is not a:
        raise AlgebraMismatch("module is not over the corner's parent algebra")
    f = a.field
    e = np.zeros(a.dim, dtype=np.int64)
    for i in corner.idem_subset:
        e = f.add(e, a.idempotents[i])
    basis = linalg.row_space_basis(f, x.rho(e))
    r = basis.shape[0]
    action = np.zeros((corner.algebra.dim, r, r), dtype=np.int64)
    for t in range(corner.algebra.dim):
        img = f.matmul(basis, x.rho(corner.basis_rows[t]))
        coords = linalg.solve_raw(f, basis.T, img.T)
        action[t] = coords.T
    return RightModule(corner.algebra, r, action,
                       "%s*e" % x.label if x.label else "")


def bridge_module(a: BasedAlgebra, i: int, k: int) -> RightModule:
    """Realise the Nakayama module e_iA/e_iJ^k over a from_kupisch algebra."""
    bridge = getattr(a, "nak_bridge", None)
    if bridge is None:
        raise ValueError("algebra was not built by from_kupisch")
    series = bridge["series"]
    index = bridge["path_index"]
    f = a.field
    projs, _ = projectives(a)
    p = projs[i]
    if k == series.c[i]:
        return p
    # e_iJ^k is spanned by the paths from i of length >= k
    rows = []
    for t in range(k, series.c[i]):
        v = np.zeros(a.dim, dtype=np.int64)
        v[index[(i, t)]] = f.one
        # coordinates inside e_iA
        rows.append(v)
    # express in p's basis
    incl = a.L(a.idempotents[i])
    sub_basis = linalg.row_space_basis(f, incl)
    coords = np.array([linalg.solve_raw(f, sub_basis.T, r) for r in rows])
    quo, _ = quotient_by_rows(p, coords, label="e%dA/e%dJ^%d" % (i, i, k))
    return quo
