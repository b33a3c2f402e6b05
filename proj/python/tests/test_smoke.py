import pytest

import exfeec as fx


def test_worked_example_components():
    T = [0, 1, 2]
    w = fx.PolyForm.lam(T, 0) ^ fx.PolyForm.whitney(T, [1, 2])
    comps = {tuple(s): str(c) for s, c in fx.bubble_decompose(w)}
    assert comps[(0, 1)] == "1"
    assert comps[(0, 2)] == "-1"
    assert comps[(0, 1, 2)] == "0"


def test_ring_star_twice():
    T = [0, 1, 2]
    for w in fx.space_basis("full", T, 1, 1):
        lhs = fx.ring_star(fx.ring_star(w))
        bubble = fx.PolyForm.lam(T, 0) ^ fx.PolyForm.lam(T, 1) ^ fx.PolyForm.lam(T, 2)
        assert lhs == "-1" * (bubble ^ w)


def test_trace_free_and_extension():
    face = [0, 2, 3]
    basis = fx.space_basis("full", face, 2, 1, trace_free=True)
    assert basis
    for w in basis:
        assert fx.is_trace_free(w)
        e = fx.dot_extend([0, 1, 2, 3], w)
        assert fx.trace(e, face) == w


def test_not_trace_free_raises():
    with pytest.raises(ValueError):
        fx.bubble_decompose(fx.PolyForm.dlam([0, 1, 2], [1]))


def test_tables_and_counterexample():
    t = fx.basis_table(2, 0, 3)
    assert t["direct_sum"] and len(t["forms"]) == 10
    assert fx.gram_table(3, 1, 2, "trimmed")["ok"]
    c = fx.counterexample()
    assert c["trimmed_extension"]["extension_unicode"] == "λ₁λ₂(φ₂₃+φ₁₃)"
    assert c["full_extension"]["koszul_v1_unicode"] == "−(1/3)λ₀λ₁λ₂λ₃"
    assert fx.two_cell(2, 1, 2, "trimmed")["ok"]


def test_json_round_trip_and_integral():
    w = fx.PolyForm.lam([0, 1], 0) ^ fx.PolyForm.dlam([0, 1], [1])
    assert fx.PolyForm.from_json(w.to_json()) == w
    assert fx.integrate(w) == "1/2"


def test_verify_small():
    reps = fx.verify(max_n=1, statements=["hodge.involution", "ring_star.iso"])
    assert reps and all(r["verdict"] == "pass" for r in reps)
    with pytest.raises(ValueError):
        fx.verify(bogus=1)
    assert "two_cell.continuity" in fx.statements()
