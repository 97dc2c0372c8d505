"""Named example algebras used by the test-suites and the CLI.

Each fixture resolves deterministically (given field and seed) to a
validated algebra together with the side data the theorem checks need:
the underlying Nakayama series where applicable, the base algebra and
generator for endomorphism-algebra fixtures, and a pool of modules with a
flag saying whether the pool is a certified-complete list of
indecomposables.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg, algebra as alg, modrep as mr, nakayama as nak

__all__ = ["Fixture", "FIXTURE_NAMES", "build_fixture", "parametric_kupisch",
           "penny_farthing_algebra", "gf4_local_algebra", "m_ab"]

FIXTURE_NAMES = [
    "kupisch-455",
    "kupisch-56",
    "sym-777-gendo",
    "penny-farthing-gendo",
    "gf4-local-gendo",
    "a2-line",
    "auslander-22",
    "two-periodic-demo",
]


@dataclass
class Fixture:
    name: str
    algebra: alg.BasedAlgebra
    field: linalg.FieldSpec
    nak: nak.NakAlgebra | None = None
    base_algebra: alg.BasedAlgebra | None = None
    endo: mr.EndoData | None = None
    base_pool: list = dc_field(default_factory=list)   # modules over base_algebra
    pool: list = dc_field(default_factory=list)        # modules over algebra
    pool_certified: bool = False
    symmetric: bool = False
    gendo_symmetric: bool | None = None
    cm_finite: bool | None = None
    extras: dict = dc_field(default_factory=dict)


_CACHE: dict = {}


def build_fixture(name: str, field: linalg.FieldSpec | None = None,
                  seed: int = 0) -> Fixture:
    key = (name, field, seed)
    if key in _CACHE:
        return _CACHE[key]
    if name == "kupisch-455":
        fx = _kupisch_fixture((4, 5, 5), field or linalg.PrimeField(2))
    elif name == "kupisch-56":
        fx = _kupisch_fixture((5, 6), field or linalg.PrimeField(2))
    elif name == "sym-777-gendo":
        fx = _sym_777_gendo(field or linalg.PrimeField(2), seed)
    elif name == "penny-farthing-gendo":
        fx = _penny_farthing_gendo(field or linalg.PrimeField(2), seed)
    elif name == "gf4-local-gendo":
        fx = _gf4_gendo(seed)
    elif name == "a2-line":
        fx = _kupisch_fixture((2, 1), field or linalg.PrimeField(2), cyclic=False)
    elif name == "auslander-22":
        fx = _auslander_22(field or linalg.PrimeField(2), seed)
    elif name == "two-periodic-demo":
        fx = _two_periodic_demo(field or linalg.PrimeField(2), seed)
    else:
        raise KeyError("unknown fixture %r (known: %s)"
                       % (name, ", ".join(FIXTURE_NAMES)))
    _CACHE[key] = fx
    return fx


def parametric_kupisch(s: int, field: linalg.FieldSpec | None = None) -> Fixture:
    """The series (3s+1, 3s+2, 3s+2)."""
    return _kupisch_fixture((3 * s + 1, 3 * s + 2, 3 * s + 2),
                            field or linalg.PrimeField(2),
                            name="kupisch-%d%d%d" % (3 * s + 1, 3 * s + 2, 3 * s + 2))


def _kupisch_fixture(c, field, cyclic=True, name=None) -> Fixture:
    series = nak.validate_kupisch(c, cyclic=cyclic)
    a = alg.from_kupisch(series, field)
    pool = [mr.bridge_module(a, m.i, m.k) for m in nak.indecomposables(series)]
    return Fixture(
        name=name or "kupisch-" + "".join(str(x) for x in c),
        algebra=a, field=field, nak=series,
        pool=pool, pool_certified=True,
        symmetric=series.symmetric,
        gendo_symmetric=False,
        cm_finite=True,
    )


def _endo_fixture(name, base, summand_specs, field, seed,
                  base_pool, pool_certified=False, cm_finite=None,
                  extras=None) -> Fixture:
    _, reg = mr.projectives(base)
    endo = mr.endo_algebra([reg] + list(summand_specs), seed=seed)
    pool = []
    for x in base_pool:
        hx = mr.hom_functor(endo, x)
        if hx.dim:
            pool.append(hx)
    return Fixture(
        name=name, algebra=endo.algebra, field=field,
        base_algebra=base, endo=endo,
        base_pool=list(base_pool), pool=pool,
        pool_certified=pool_certified,
        symmetric=False, gendo_symmetric=True, cm_finite=cm_finite,
        extras=extras or {},
    )


def _sym_777_gendo(field, seed) -> Fixture:
    series = nak.validate_kupisch((7, 7, 7))
    a = alg.from_kupisch(series, field)
    m = mr.bridge_module(a, 2, 5)       # e_0 J^2
    base_pool = [mr.bridge_module(a, x.i, x.k) for x in nak.indecomposables(series)]
    fx = _endo_fixture("sym-777-gendo", a, [m], field, seed, base_pool,
                       extras={"base_series": series, "generator_extra": m})
    fx.extras["base_pool_certified"] = True
    return fx


def penny_farthing_algebra(field) -> alg.BasedAlgebra:
    """k-algebra on a loop alpha at vertex 0 and arrows beta1: 0 -> 1,
    beta2: 1 -> 0, bound by alpha^2 - beta1 beta2 and beta2 beta1."""
    q = alg.QuiverPresentation(
        vertices=["1", "2"],
        arrows=[(0, 0, "a"), (0, 1, "b1"), (1, 0, "b2")],
        relations=[
            [(field.one, (0, 0)), (int(field.neg(field.one)), (1, 2))],
            [(field.one, (2, 1))],
        ],
    )
    return alg.validate(alg.from_quiver(q, field))


def _dedup_pool(mods, seed, max_dim=None):
    """Decompose the given modules and keep one copy per iso class."""
    pool = []
    for m in mods:
        if m.dim == 0 or (max_dim and m.dim > max_dim):
            continue
        for part in mr.decompose(m, seed):
            if not any(p.dim == part.dim and mr.iso(part, p, seed) for p in pool):
                pool.append(part)
    return pool


def _orbit(m, op, steps):
    out = [m]
    for _ in range(steps):
        m = op(m)
        if m.dim == 0:
            break
        out.append(m)
    return out


def _penny_farthing_gendo(field, seed) -> Fixture:
    a = penny_farthing_algebra(field)
    projs, reg = mr.projectives(a)
    s = mr.simples(a)
    st2 = mr.structure(projs[1])
    e2j2 = mr.structure(st2.radical).radical   # e_2 J^2, dimension 2
    e2j2.label = "e2J2"
    raw = projs + s + [e2j2]
    raw += _orbit(s[1], mr.syzygy, 3) + _orbit(s[1], mr.cosyzygy, 3)
    raw += _orbit(e2j2, mr.syzygy, 3) + _orbit(e2j2, mr.cosyzygy, 3)
    base_pool = _dedup_pool(raw, seed, max_dim=12)
    fx = _endo_fixture("penny-farthing-gendo", a, [s[1]], field, seed,
                       base_pool, cm_finite=True,
                       extras={"s2": s[1], "e2j2": e2j2})
    fx.extras["domdim4_module"] = mr.hom_functor(fx.endo, e2j2)
    return fx


def gf4_local_algebra() -> alg.BasedAlgebra:
    """k[x,y]/(x^2, y^2, xy - yx) over the field with four elements."""
    f = linalg.GF4()
    q = alg.QuiverPresentation(
        vertices=["*"],
        arrows=[(0, 0, "x"), (0, 0, "y")],
        relations=[
            [(f.one, (0, 0))],
            [(f.one, (1, 1))],
            [(f.one, (0, 1)), (int(f.neg(f.one)), (1, 0))],
        ],
    )
    return alg.validate(alg.from_quiver(q, f))


def m_ab(a: alg.BasedAlgebra, ca: int, cb: int) -> mr.RightModule:
    """M(ca, cb) = A/(ca*x + cb*y)A over the local GF(4) algebra."""
    f = a.field
    reg = mr.regular_module(a)
    # basis order is e, x, y, xy (normal forms sorted by length then label)
    v = np.zeros(a.dim, dtype=np.int64)
    labels = list(a.basis_labels)
    v[labels.index("x")] = ca
    v[labels.index("y")] = cb
    sub, inc = mr.submodule_from_rows(reg, v[None, :], close=True)
    quo, _ = mr.quotient_by_rows(reg, inc.matrix, label="M(%d,%d)" % (ca, cb))
    return quo


def _gf4_gendo(seed) -> Fixture:
    f = linalg.GF4()
    a = gf4_local_algebra()
    m11 = m_ab(a, 1, 1)
    m1w = m_ab(a, 1, 2)
    m1w2 = m_ab(a, 1, 3)
    s = mr.simples(a)[0]
    reg = mr.regular_module(a)
    raw = [reg, m11, m1w, m1w2, m_ab(a, 1, 0), m_ab(a, 0, 1), s,
           mr.structure(reg).radical]
    base_pool = _dedup_pool(raw, seed, max_dim=8)
    fx = _endo_fixture("gf4-local-gendo", a, [m11], f, seed, base_pool,
                       cm_finite=False,
                       extras={"m11": m11, "m1w": m1w, "m1w2": m1w2})
    fx.extras["gpi_candidate"] = mr.hom_functor(fx.endo, m1w)
    return fx


def _auslander_22(field, seed) -> Fixture:
    series = nak.validate_kupisch((2, 2))
    a = alg.from_kupisch(series, field)
    indecs = [mr.bridge_module(a, m.i, m.k) for m in nak.indecomposables(series)]
    _, reg = mr.projectives(a)
    endo = mr.endo_algebra(indecs, seed=seed)
    pool = [mr.hom_functor(endo, x) for x in indecs]
    return Fixture(
        name="auslander-22", algebra=endo.algebra, field=field,
        base_algebra=a, endo=endo, base_pool=indecs, pool=pool,
        pool_certified=False, symmetric=False,
        gendo_symmetric=False, cm_finite=True,
        extras={"base_series": series},
    )


def _two_periodic_demo(field, seed) -> Fixture:
    series = nak.validate_kupisch((3,))
    a = alg.from_kupisch(series, field)
    w = mr.bridge_module(a, 0, 1)      # the simple module, 2-periodic
    base_pool = [mr.bridge_module(a, m.i, m.k) for m in nak.indecomposables(series)]
    fx = _endo_fixture("two-periodic-demo", a, [w], field, seed, base_pool,
                       extras={"w": w, "base_series": series})
    fx.extras["base_pool_certified"] = True
    return fx
