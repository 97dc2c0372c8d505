import pytest

from gorlab import algebra as alg
from gorlab import linalg as la
from gorlab import modrep as mr
from gorlab import nakayama as nak
from gorlab import invariants as inv

F2 = la.PrimeField(2)


@pytest.fixture(scope="module")
def a455():
    return alg.from_kupisch(nak.validate_kupisch((4, 5, 5)), F2)


def test_algebra_domdim_455(a455):
    assert inv.algebra_domdim(a455) == 2


def test_gorenstein_dims_455(a455):
    left, right = inv.gorenstein_dims(a455)
    assert left == 2 and right == 2


def test_module_dims_match_closed_form(a455):
    a = a455.nak_bridge["series"]
    for m in nak.indecomposables(a):
        want = nak.dims_nak(a, m)
        bm = mr.bridge_module(a455, m.i, m.k)
        assert str(inv.module_projdim(bm)) == str(want["projdim"])
        assert str(inv.module_domdim(bm)) == str(want["domdim"])


def test_gp_matches_ringel_criterion(a455):
    a = a455.nak_bridge["series"]
    want = {(m.i, m.k) for m in nak.gp_indecs(a)}
    got = set()
    for m in nak.indecomposables(a):
        v = inv.gp_test(a455, mr.bridge_module(a455, m.i, m.k))
        assert v.status in ("yes", "no")
        if v.status == "yes":
            got.add((m.i, m.k))
    assert got == want


def test_gp_verdict_no_names_witness_degree(a455):
    v = inv.gp_test(a455, mr.bridge_module(a455, 2, 1))
    assert v.status == "no" and v.witness_degree is not None


def test_gp_yes_implies_domdim_at_least_algebra_domdim(a455):
    dd = inv.algebra_domdim(a455)
    a = a455.nak_bridge["series"]
    for m in nak.indecomposables(a):
        bm = mr.bridge_module(a455, m.i, m.k)
        if inv.gp_test(a455, bm).status == "yes":
            assert inv.module_domdim(bm).ge(dd.as_int())


def test_gp_equals_dom_d_when_gordim_is_domdim(a455):
    # gordim = domdim = 2 here, so GP indecomposables = Dom_2 indecomposables
    a = a455.nak_bridge["series"]
    for m in nak.indecomposables(a):
        bm = mr.bridge_module(a455, m.i, m.k)
        gp = inv.gp_test(a455, bm).status == "yes"
        assert gp == inv.module_domdim(bm).ge(2)


def test_gendo_symmetric_check_examples(fix, a455):
    assert not inv.gendo_symmetric_check(a455)
    assert inv.gendo_symmetric_check(fix("sym-777-gendo").algebra)
    assert inv.gendo_symmetric_check(fix("penny-farthing-gendo").algebra)


def test_nearly_gorenstein_nak():
    assert inv.nearly_gorenstein_check_nak(nak.validate_kupisch((5, 6)))
    assert inv.nearly_gorenstein_check_nak(nak.validate_kupisch((4, 5, 5)))


def test_mueller_requires_symmetric_base(a455):
    projs, reg = mr.projectives(a455)
    with pytest.raises(inv.NotSymmetric):
        inv.mueller_domdim(a455, reg)


def test_mueller_requires_generator(fix):
    f = fix("penny-farthing-gendo")
    with pytest.raises(inv.NotGenerator):
        inv.mueller_domdim(f.base_algebra, f.extras["s2"])


def test_fdomdim_pool_warns_when_uncertified(fix):
    f = fix("penny-farthing-gendo")
    with pytest.warns(inv.PoolIncomplete):
        d = inv.fdomdim_pool(f.pool, certified=False)
    assert d == 4


def test_invariant_report_smoke(fix):
    rep = inv.invariant_report(fix("a2-line"), run_checks=False)
    assert rep.domdim is not None
    assert rep.seed == 0 and rep.bound == inv.DEFAULT_BOUND
    # uncertified-infinity policy: every infinite carries a certificate
    for d in (rep.domdim, rep.gordim_left, rep.gordim_right):
        if d is not None and d.is_infinite:
            assert d.certificate is not None or d.by_convention


def test_theorem_suite_auslander(fix):
    checks = inv.theorem_suite(fix("auslander-22"))
    by_name = {c.name: c for c in checks}
    c = by_name["auslander-proj-equals-dom-d"]
    assert c.status == "pass"
    assert all(c.status in ("pass", "skip") for c in checks)


def test_theorem_suite_never_fails_on_nakayama_fixtures(fix):
    for name in ("kupisch-455", "kupisch-56", "a2-line"):
        for c in inv.theorem_suite(fix(name)):
            assert c.status in ("pass", "skip"), (name, c)


def test_almost_split_rejects_split_sequence(a455):
    m = mr.bridge_module(a455, 0, 3)
    t = mr.tau(m)
    _, injections, projections = mr.direct_sum([t, m])
    pool = [mr.bridge_module(a455, i, k)
            for i in range(3) for k in range(1, (4, 5, 5)[i] + 1)]
    assert not inv.almost_split_verify(a455, (injections[0], projections[1]),
                                       pool)
