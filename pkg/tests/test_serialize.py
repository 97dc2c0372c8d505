import numpy as np

from gorlab import algebra as alg
from gorlab import linalg as la
from gorlab import modrep as mr
from gorlab import nakayama as nak
from gorlab import serialize as ser
from gorlab.dims import HomologicalDim, PeriodicityCertificate

from conftest import assert_iso


def _a455():
    return alg.from_kupisch(nak.validate_kupisch((4, 5, 5)),
                            la.PrimeField(2))


def test_field_round_trip():
    for f in (la.PrimeField(5), la.GF4()):
        g = ser.field_from_json(ser.field_to_json(f))
        assert g.order == f.order
        assert g.mul(2, 3) == f.mul(2, 3)


def test_algebra_round_trip_revalidates():
    a = _a455()
    b = ser.algebra_from_json(ser.algebra_to_json(a))   # validates on load
    assert b.dim == a.dim
    assert np.array_equal(b.mult, a.mult)


def test_module_round_trip_is_isomorphic():
    a = _a455()
    m = mr.bridge_module(a, 0, 3)
    m2 = ser.module_from_json(ser.module_to_json(m), a)
    assert_iso(m, m2)


def test_zero_module_round_trip():
    a = _a455()
    z = ser.module_from_json(ser.module_to_json(mr.zero_module(a)), a)
    assert z.dim == 0


def test_dim_round_trip():
    cases = [
        HomologicalDim.finite(3),
        HomologicalDim.infinite(PeriodicityCertificate("syzygy", 1, 4)),
        HomologicalDim.infinite_by_convention(),
        HomologicalDim.at_least(24, "cutoff 24 exhausted"),
    ]
    for d in cases:
        r = ser.dim_from_json(ser.dim_to_json(d))
        assert str(r) == str(d)
        assert r.kind == d.kind and r.bound_reason == d.bound_reason


def test_dump_json_is_deterministic(tmp_path):
    a = _a455()
    p1 = tmp_path / "a.json"
    obj = ser.algebra_to_json(a)
    text = ser.dump_json(obj, str(p1))
    assert ser.dump_json(obj) == text
    assert ser.load_json(str(p1)) == obj
