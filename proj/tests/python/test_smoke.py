"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import lsdc


def test_reference_instance_costs():
    s = lsdc.example_scheme()
    assert s.q == 7
    assert (s.K, s.N, s.L, s.T) == (4, 8, 6, 1)
    assert s.verify()
    c = s.costs()
    assert c["gamma"] == Fraction(3, 4)
    assert c["delta"] == Fraction(19, 32)
    assert c["Delta"] == Fraction(19, 4)
    assert c["max_column_support"] == 6
    assert c["user_symbols"] == [5, 4, 4, 6]
    assert "q=7" in repr(s)


def test_build_and_json_round_trip():
    s = lsdc.build_coded([[1, 0], [0, 1]], q=2, N=4, radius=1)
    assert s.verify()
    assert s.costs()["gamma"] <= Fraction(1, 4)
    text = s.to_json()
    back = lsdc.Scheme.from_json(text)
    assert back.to_json() == text
    assert back.provenance["strategy"] == s.provenance["strategy"]


def test_run_round():
    s = lsdc.example_scheme()
    r = s.run_round([1, 2, 3, 4, 5, 6])
    assert r["ok"]
    assert r["decoded"] == r["demanded"]
    assert len(r["z"]) == 8


def test_bounds_and_entropy():
    x = lsdc.entropy_inv(0.5, 2)
    assert abs(lsdc.entropy(x, 2) - 0.5) < 1e-10
    assert lsdc.converse_gamma(4, 8, 2) <= lsdc.achievable_gamma(2, 8, 2) + 1e-12
    prev = lsdc.multishot_gamma_bound(2, 8, 1, 2)["value"]
    for T in range(2, 9):
        cur = lsdc.multishot_gamma_bound(2, 8, T, 2)["value"]
        assert cur < prev
        prev = cur
    assert lsdc.multishot_gamma_bound_derivative(0.5, 2.0, 2) < 0
    labels = [p[0] for p in lsdc.region_report(2, 2, 8, 4)]
    assert labels == [
        "uncoded_decentralized",
        "uncoded_centralized",
        "coded_achievable",
        "converse",
    ]


def test_scheme_bounds_report():
    b = lsdc.example_scheme().bounds()
    assert b["finite_n_ok"]
    assert b["within_capacity"]
    assert b["converse"] <= b["achieved_gamma"]


def test_brute_force_matches_known_optimum():
    r = lsdc.brute_force_optimal_gamma([[1, 0], [0, 1]], q=2, N=4)
    assert r["gamma"] == Fraction(1, 4)
    assert r["searched"] == 256


def test_errors_are_typed():
    with pytest.raises(lsdc.InfeasibleD):
        lsdc.build_coded([[1, 0], [0, 1]], q=2, N=1)
    with pytest.raises(lsdc.DomainError):
        lsdc.entropy(2.0, 2)
    with pytest.raises(lsdc.Error):
        lsdc.Scheme.from_json("not json")
