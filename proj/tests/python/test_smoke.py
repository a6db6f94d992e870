"""Smoke tests for the python bindings: the main operations round-trip and a
few published counts come out right."""

import json

import pytest

import ilat


def test_chain_counts():
    c = ilat.chain(7)
    assert c.n == 7
    assert ilat.all_congruences(c.base).count() == 64
    assert ilat.i_congruences(c).count() == 8
    bz = ilat.trivial_brouwer(c)
    assert ilat.bz_congruences(bz).count() == 5


def test_benzene_ring():
    b = ilat.b6()
    fam = ilat.i_congruences(b)
    assert fam.count() == 5
    blocks = [p.classes() for p in fam.members]
    assert [[0, 1, 2, 3, 4, 5]] in blocks
    flags = ilat.classify(b)
    assert flags["pseudo_kleene"]
    assert not flags["antiortholattice"]  # interior chains meet at 0
    assert not flags["kleene"]
    assert ilat.classify(ilat.catalog("fn", [8]))["antiortholattice"]


def test_validate_and_errors():
    lat = ilat.validate([[True, True], [False, True]])
    assert lat.bottom() == 0 and lat.top() == 1
    with pytest.raises(ilat.IlatError):
        ilat.validate([[True, True, True], [False, True, False], [False, False, True]])


def test_document_roundtrip():
    text = ilat.emit_json(ilat.b6())
    doc = json.loads(text)
    assert doc["format_version"] == 1
    assert len(doc["elements"]) == 6
    parsed = ilat.parse(text)
    assert parsed["lattice"].n == 6
    assert ilat.canonical_i_key(parsed["involution_lattice"]) == ilat.canonical_i_key(
        ilat.b6()
    )


def test_constructions_and_isomorphism():
    prod = ilat.direct_product(ilat.chain(2), ilat.chain(3))
    assert ilat.all_congruences(prod.base).count() == 8
    assert ilat.is_isomorphic(prod.base, ilat.catalog("en", [6]).base)
    assert not ilat.is_isomorphic(prod.base, ilat.chain(6).base)
    q = ilat.quotient(ilat.b6(), ilat.atoms(ilat.i_congruences(ilat.b6()))[0])
    assert q.n == 4


def test_census_and_theorem():
    rec = ilat.census(5)
    assert rec.lattice_class_count == 5
    assert rec.max_i_congruences == 4
    rec = ilat.census_verify(5, "maxcgkl")
    assert rec.extremal_witnesses == [ilat.canonical_i_key(ilat.chain(5))]


def test_dot_and_narrows():
    dot = ilat.emit_dot(ilat.b6(), True)
    assert dot.count("dashed") == 3
    assert ilat.narrows(ilat.b6().base) == [(1, 3), (2, 4)]
