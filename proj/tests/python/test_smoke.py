import math

import pytest

import _spectraltk as stk


def test_graph_basics():
    g = stk.make_cycle(4)
    assert g.n == 4 and g.m == 4
    assert g.connected and g.regular
    assert g.degree(0) == 2.0
    assert abs(g.stationary(0) - 0.25) < 1e-12


def test_parse_roundtrip():
    g = stk.parse_edge_list("2 1\n0 1\n")
    assert g.n == 2 and g.m == 1
    text = stk.serialize_edge_list(g)
    assert stk.parse_edge_list(text).m == 1


def test_spectrum_c4():
    g = stk.make_cycle(4)
    s = stk.compute_spectrum(g)
    assert [round(v, 9) for v in s.eigenvalues] == [0.0, 1.0, 1.0, 2.0]
    mu, mu_star = stk.graph_measure(s, 1.0)
    assert abs(mu - 0.75) < 1e-12 and abs(mu_star - 0.5) < 1e-12


def test_embedding_invariant():
    g = stk.make_cycle(4)
    s = stk.compute_spectrum(g)
    emb = stk.spectral_embedding(s, g, 1.0)
    assert emb.dims == 2
    for x in range(4):
        _, mu_star = stk.vertex_measure(s, g, x, 1.0)
        assert abs(g.degree(x) * emb.norm2(x) - mu_star) < 1e-9


def test_resistance_and_walk():
    g = stk.make_cycle(4)
    assert abs(stk.effective_resistance(g, 0, 1) - 0.75) < 1e-12
    s = stk.compute_spectrum(g)
    k = stk.WalkKernel(g, s)
    assert abs(stk.return_probability(k, 0, 2) - 3.0 / 8.0) < 1e-12
    assert stk.linf_mixing_time(k, 0.25) == 3


def test_trees():
    g = stk.make_complete(4)
    assert stk.spanning_tree_count_exact(g) == "16"
    assert stk.brute_force_tree_count(g) == 16
    s = stk.compute_spectrum(g)
    assert abs(stk.log_tau_spectral(g, s) - math.log(16)) < 1e-9


def test_estimator_runs():
    g = stk.make_cycle(8)
    out = stk.estimate_log_tau_local(
        g, epsilon=1.0, delta_fail=0.5, seed=7, r=60, num_samples=20000,
        degree_samples=500)
    assert abs(out["value"] - math.log(8) / 8) < 0.5
    assert out["queries_used"] <= 2 * out["num_samples"] * out["r"] + \
        out["degree_samples"] + out["num_samples"]


def test_bound_suite():
    ok, _ = stk.run_bound_suite(stk.make_cycle(8))
    assert ok


def test_domain_errors():
    with pytest.raises(ValueError):
        stk.parse_edge_list("1 1\n0 0\n")
    with pytest.raises(ValueError):
        stk.gamma_function(-1.0)
