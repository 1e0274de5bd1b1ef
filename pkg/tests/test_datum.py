import json

import pytest

from qhopf import (load, loads, verify, verify_quasi_bialgebra,
                   verify_quasi_hopf, verify_quasitriangular, default_level)
from qhopf.errors import MissingR, ParseError, ShapeError
from qhopf.rng import SplitMix64
from qhopf.tensor import apply_legs, mult

from mutation import mutate


def test_round_trip_all_examples(kz2, fz2w, fz3w, sw, dz2w, dz3w):
    for d in (kz2, fz2w, fz3w, sw, dz2w, dz3w):
        assert load(d.to_json()) == d
        assert loads(d.dumps()) == d


def test_load_rejects_bad_index(kz2):
    doc = kz2.to_json()
    doc["phi"] = {"arity": 3, "entries": [[[0, 0, 5], "1"]]}
    with pytest.raises(ShapeError):
        load(doc)


def test_load_rejects_bad_scalar(kz2):
    doc = kz2.to_json()
    doc["epsilon"] = ["1", "bogus"]
    with pytest.raises(ParseError):
        load(doc)


def test_load_rejects_wrong_arity(kz2):
    doc = kz2.to_json()
    doc["alpha"] = {"arity": 2, "entries": [[[0, 0], "1"]]}
    with pytest.raises(ShapeError):
        load(doc)


def test_loads_position_on_bad_json():
    with pytest.raises(ParseError) as err:
        loads("{ not json")
    assert err.value.line == 1


def test_load_missing_key(kz2):
    doc = kz2.to_json()
    del doc["delta"]
    with pytest.raises(ParseError):
        load(doc)


def test_content_hash_stable(kz2):
    assert kz2.content_hash() == load(kz2.to_json()).content_hash()


def test_default_level(kz2, fz2w, sw):
    assert default_level(kz2) == "ribbon"  # carries v
    assert default_level(fz2w) == "hopf"
    assert default_level(sw) == "qt"


def test_verify_layers_pass(kz2, fz2w, fz3w, sw):
    for d in (kz2, fz2w, fz3w, sw):
        assert verify_quasi_bialgebra(d).ok
        assert verify_quasi_hopf(d).ok
    assert verify_quasitriangular(kz2).ok
    assert verify_quasitriangular(sw).ok


def test_verify_requires_r(fz2w):
    with pytest.raises(MissingR):
        verify_quasitriangular(fz2w)


def test_counit_associator_axiom_shape(fz3w):
    # the middle-counit contraction of the associator is the unit square
    out = apply_legs(fz3w.phi, [fz3w.leg("id"), fz3w.leg("eps"), fz3w.leg("id")])
    assert out == fz3w.unit_tensor(2)


def test_r_counit_contraction(sw):
    out = apply_legs(sw.R, [sw.leg("eps"), sw.leg("id")])
    assert out == sw.unit_tensor(1)


def test_pentagon_failure_has_witness(fz2w):
    bad = mutate(fz2w, "phi", SplitMix64(11))
    rep = verify_quasi_bialgebra(bad)
    assert not rep.ok
    failing = {c.name for c in rep.failures()}
    assert failing  # at least one named check carries the failure
    for c in rep.failures():
        assert c.witness is not None


def test_alpha_zeroed_breaks_duality(sw):
    from qhopf.tensor import SparseTensor
    bad = sw.with_changes(alpha=SparseTensor.make(sw.field, 1, 4, {}))
    rep = verify_quasi_hopf(bad)
    names = {c.name for c in rep.failures()}
    assert "duality_left" in names or "duality_right" in names


def test_verify_combined_level(kz2):
    rep = verify(kz2, level="ribbon")
    assert rep.ok
    # bialgebra + hopf + qt + ribbon checks all present
    names = [c.name for c in rep.checks]
    assert "pentagon" in names and "duality_left" in names
    assert "hexagon_left" in names and "ribbon_coproduct" in names


def test_report_json_round_trip(kz2):
    rep = verify_quasi_bialgebra(kz2)
    encoded = json.dumps(rep.to_dict())
    decoded = json.loads(encoded)
    assert all(c["status"] == "pass" for c in decoded)


def test_coproduct_leg_is_algebra_hom(fz3w):
    # applying the coproduct leg commutes with products, randomized pairs
    rng = SplitMix64(3)
    f = fz3w.field
    for _ in range(10):
        t1 = _random_vec(fz3w, rng)
        t2 = _random_vec(fz3w, rng)
        lhs = apply_legs(mult(t1, t2, fz3w.algebra), [fz3w.leg("D")])
        rhs = mult(apply_legs(t1, [fz3w.leg("D")]),
                   apply_legs(t2, [fz3w.leg("D")]), fz3w.algebra)
        assert lhs == rhs


def _random_vec(d, rng):
    from qhopf.tensor import SparseTensor
    items = {(i,): d.field.from_int(rng.below(d.field.size))
             for i in range(d.dim)}
    return SparseTensor.make(d.field, 1, d.dim, items)
