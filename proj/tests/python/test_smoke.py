import pytest

import snfmom


def test_list_families():
    families = dict(snfmom.list_families())
    assert len(families) == 10
    assert "catalan" in families
    assert "schroeder" not in families  # schroeder lives on the Toeplitz side


def test_oracle_moment_routes_agree():
    assert snfmom.oracle_moment("catalan", 6, "paths") == "q^3 + q^2 + 2*q + 1"
    by_rec = snfmom.oracle_moment("catalan", 6, "recurrence")
    by_closed = snfmom.oracle_moment("catalan", 6, "closed")
    assert by_rec == by_closed == "q^3 + q^2 + 2*q + 1"


def test_verify_hankel():
    rep = snfmom.verify_hankel("catalan", 3)
    assert rep["match"] is True
    assert rep["claimed"] == ["1", "1", "q", "q^3"]
    assert rep["rows"] == 4

    rep = snfmom.verify_hankel("catalan", 2, shift="even")
    assert rep["match"] is True
    assert rep["claimed"] == ["1", "q", "q^6"]


def test_verify_hankel_symbolic():
    rep = snfmom.verify_hankel_symbolic(3)
    assert rep["match"] is True
    assert rep["claimed"][1] == "l1"


def test_verify_toeplitz():
    reports = snfmom.verify_toeplitz(4)
    assert len(reports) == 2
    assert all(r["match"] for r in reports)


def test_verify_lattice():
    (rep,) = snfmom.verify_lattice("partitions", 3)
    assert rep["match"] is True
    assert rep["claimed"][0] == "q"

    (rep,) = snfmom.verify_lattice("noncrossing", 3)
    assert rep["match"] is True

    bridge, dets = snfmom.verify_lattice("lickorish", 3)
    assert bridge["match"] and dets["match"]


def test_verify_young():
    assert snfmom.verify_young([3, 1])["match"] is True
    assert snfmom.verify_young_rect([3, 1], 3, 2)["match"] is True
    assert snfmom.verify_young_staircase(2, odd=False)["match"] is True


def test_verify_vandermonde():
    assert snfmom.verify_vandermonde("a", 3)["match"] is True
    assert snfmom.verify_vandermonde("b", 3)["match"] is True


def test_probe_conjecture():
    rep = snfmom.probe_conjecture("Jq", 2)
    assert rep["verdict"] == "consistent"
    assert any("minor" in c for c in rep["checked"])


def test_bad_inputs_raise():
    with pytest.raises(ValueError):
        snfmom.oracle_moment("no-such-family", 1, "paths")
    with pytest.raises(ValueError):
        snfmom.verify_vandermonde("c", 2)
