import itertools
import math

import numpy as np
import pytest

import mixbound as mb
from mixbound.errors import CapabilityError, InputError


def solve_stationary_oracle(matrix):
    # independent least-squares fixed-point solve
    n = matrix.shape[0]
    a = np.vstack([matrix.T - np.eye(n), np.ones((1, n))])
    b = np.zeros(n + 1)
    b[-1] = 1.0
    pi, *_ = np.linalg.lstsq(a, b, rcond=None)
    return pi


def tv_scan_oracle(matrix, pi, eps, limit=5000):
    # independent linear scan over t with explicit TV computation
    power = np.eye(matrix.shape[0])
    for t in range(limit):
        tv = 0.5 * np.abs(power - pi).sum(axis=1).max()
        if tv <= eps:
            return t
        power = power @ matrix
    raise AssertionError("oracle scan exhausted")


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def test_lazy_simple_k2(k2_chain):
    assert np.allclose(k2_chain.matrix, [[0.5, 0.5], [0.5, 0.5]])
    assert np.allclose(k2_chain.pi, [0.5, 0.5])
    assert k2_chain.flags == mb.ChainFlags(True, True, True)


def test_lazy_simple_path(path3_chain):
    assert np.allclose(path3_chain.matrix[1], [0.25, 0.5, 0.25])
    assert np.allclose(path3_chain.pi, [0.25, 0.5, 0.25])
    # detailed balance on the first edge
    assert path3_chain.pi[0] * path3_chain.matrix[0, 1] == pytest.approx(1 / 8)
    assert path3_chain.pi[1] * path3_chain.matrix[1, 0] == pytest.approx(1 / 8)


def test_metropolis_uniform_on_k2_equals_lazy(k2_chain):
    g = mb.complete_graph(2)
    P = mb.metropolis_walk(g, [0.5, 0.5])
    assert np.array_equal(P.matrix, k2_chain.matrix)


def test_metropolis_uniform_path_stationary():
    g = mb.path_graph(3)
    P = mb.metropolis_walk(g, np.full(3, 1 / 3))
    pi = solve_stationary_oracle(P.matrix)
    assert np.abs(pi - 1 / 3).max() < 1e-10
    assert np.abs(P.pi - 1 / 3).max() < 1e-10


@pytest.mark.parametrize("g,target", [
    (mb.path_graph(4), [0.4, 0.3, 0.2, 0.1]),
    (mb.cycle_graph(5), [0.1, 0.1, 0.2, 0.3, 0.3]),
    (mb.barbell_graph(6), None),
])
def test_metropolis_detailed_balance(g, target):
    if target is None:
        target = np.full(g.n, 1 / g.n)
    P = mb.metropolis_walk(g, target)
    t = np.asarray(target, dtype=float)
    balance = t[:, None] * P.matrix - t[None, :] * P.matrix.T
    assert np.abs(balance).max() < 1e-15
    assert np.diag(P.matrix).min() >= 0.5 - 1e-12
    assert np.abs(mb.stationary(P) - t).max() < 1e-10


def test_metropolis_rejects_bad_target():
    g = mb.path_graph(3)
    with pytest.raises(InputError):
        mb.metropolis_walk(g, [0.5, 0.5, 0.0])
    with pytest.raises(InputError):
        mb.metropolis_walk(g, [0.5, 0.4, 0.3])


def test_max_degree_walk():
    g = mb.path_graph(3)
    P = mb.max_degree_walk(g)
    assert P.matrix[0, 0] == pytest.approx(0.75)
    assert P.matrix[0, 1] == pytest.approx(0.25)
    assert np.allclose(P.matrix[1], [0.25, 0.5, 0.25])
    assert np.abs(solve_stationary_oracle(P.matrix) - 1 / 3).max() < 1e-10
    assert np.allclose(P.pi, 1 / 3)


def test_max_degree_equals_lazy_on_regular():
    g = mb.cycle_graph(4)
    assert np.array_equal(mb.max_degree_walk(g).matrix,
                          mb.lazy_simple_walk(g).matrix)


def test_max_degree_self_loops_at_least_half():
    for g in (mb.barbell_graph(8), mb.hypercube_graph(3), mb.path_graph(5)):
        assert np.diag(mb.max_degree_walk(g).matrix).min() >= 0.5


# ---------------------------------------------------------------------------
# Property checks and validation
# ---------------------------------------------------------------------------

def test_check_properties_constructed(k3_chain):
    flags = mb.check_properties(k3_chain)
    assert flags.lazy and flags.irreducible and flags.reversible


def test_check_properties_not_lazy():
    g = mb.path_graph(3)
    m = [[0.4, 0.6, 0.0], [0.25, 0.5, 0.25], [0.0, 0.5, 0.5]]
    P = mb.make_chain(g, m)
    assert not P.flags.lazy
    assert P.flags.irreducible


def test_check_properties_not_reversible():
    g = mb.cycle_graph(3)
    m = [[0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5]]
    P = mb.make_chain(g, m)
    assert P.flags.lazy and P.flags.irreducible and not P.flags.reversible
    pi = mb.stationary(P)
    # detailed balance fails on the directed-bias edge
    assert abs(pi[0] * P.matrix[0, 1] - pi[1] * P.matrix[1, 0]) > 1e-3


def test_make_chain_rejects_bad_rows():
    g = mb.path_graph(3)
    ok = mb.lazy_simple_walk(g).matrix.copy()
    broken = ok.copy()
    broken[0, 0] = 0.49  # row sums to 0.99
    with pytest.raises(InputError, match="sums to"):
        mb.make_chain(g, broken)
    negative = ok.copy()
    negative[0, 0], negative[0, 1] = -0.25, 1.25
    with pytest.raises(InputError, match="negative"):
        mb.make_chain(g, negative)
    off_support = ok.copy()
    off_support[0, 1], off_support[0, 2] = 0.25, 0.25  # 1-3 is not an edge
    with pytest.raises(InputError, match="not on a graph edge"):
        mb.make_chain(g, off_support)


def test_reducible_chain():
    g = mb.path_graph(3)
    P = mb.make_chain(g, np.eye(3))
    assert not P.flags.irreducible
    assert P.pi is None
    with pytest.raises(CapabilityError):
        mb.stationary(P)
    with pytest.raises(CapabilityError):
        mb.mixing_time(P, 0.25)


def test_stationary_examples(k2_chain, path3_chain):
    assert np.allclose(mb.stationary(k2_chain), [0.5, 0.5])
    assert np.allclose(mb.stationary(path3_chain), [0.25, 0.5, 0.25])


def test_sigma(k2_chain, path3_chain):
    assert mb.stationary_ratio(k2_chain) == 1.0
    assert mb.stationary_ratio(path3_chain) == pytest.approx(2.0)
    barbell = mb.lazy_simple_walk(mb.barbell_graph(10))
    assert mb.stationary_ratio(barbell) == pytest.approx(1.25)


# ---------------------------------------------------------------------------
# Mixing time
# ---------------------------------------------------------------------------

def test_mixing_time_k2(k2_chain):
    assert mb.mixing_time(k2_chain, 0.1) == 1
    assert mb.worst_case_tv(k2_chain, 1) == 0.0


def test_mixing_time_eps_validation(k2_chain):
    with pytest.raises(InputError):
        mb.mixing_time(k2_chain, 0.6)
    with pytest.raises(InputError):
        mb.mixing_time(k2_chain, 0.0)


def test_mixing_time_cycle_matches_scan_oracle():
    P = mb.lazy_simple_walk(mb.cycle_graph(8))
    expected = tv_scan_oracle(P.matrix, P.pi, 1 / 16)
    assert mb.mixing_time(P, 1 / 16) == expected
    assert mb.mixing_time(P, 1 / 16, method="linear") == expected


@pytest.mark.parametrize("eps", [0.4, 0.125, 0.03, 1 / 64])
def test_mixing_time_methods_agree(eps):
    for P in (mb.lazy_simple_walk(mb.barbell_graph(8)),
              mb.max_degree_walk(mb.path_graph(6)),
              mb.lazy_simple_walk(mb.torus_graph(3, 3))):
        assert mb.mixing_time(P, eps) == mb.mixing_time(P, eps, method="linear")


def test_mixing_time_cap():
    P = mb.lazy_simple_walk(mb.cycle_graph(12))
    with pytest.raises(CapabilityError, match="cap"):
        mb.mixing_time(P, 0.01, cap=2)


# ---------------------------------------------------------------------------
# Spectral gap and bottleneck ratio
# ---------------------------------------------------------------------------

def test_spectral_k2(k2_chain):
    lam, gap = mb.spectral_gap(k2_chain)
    assert lam == pytest.approx(0.0, abs=1e-12)
    assert gap == pytest.approx(1.0, abs=1e-12)


def test_spectral_path(path3_chain):
    lam, _ = mb.spectral_gap(path3_chain)
    # oracle: dense eigensolve of the raw matrix (diagonalizable here)
    eigs = sorted(np.linalg.eigvals(path3_chain.matrix).real, reverse=True)
    assert lam == pytest.approx(eigs[1], abs=1e-9)
    assert lam == pytest.approx(0.5, abs=1e-12)


def test_spectral_cycle_formula():
    for n in (4, 9, 16):
        P = mb.lazy_simple_walk(mb.cycle_graph(n))
        lam, _ = mb.spectral_gap(P)
        assert lam == pytest.approx((1 + math.cos(2 * math.pi / n)) / 2, abs=1e-9)


def test_spectral_requires_reversible():
    g = mb.cycle_graph(3)
    P = mb.make_chain(g, [[0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5]])
    with pytest.raises(CapabilityError):
        mb.spectral_gap(P)


def brute_bottleneck_oracle(P):
    pi = P.pi
    best, best_set = float("inf"), None
    for size in range(1, P.n):
        for sub in itertools.combinations(range(P.n), size):
            mass = pi[list(sub)].sum()
            if mass > 0.5 + 1e-12:
                continue
            s = set(sub)
            flow = sum(pi[u] * P.matrix[u, v]
                       for u in s for v in range(P.n) if v not in s)
            if flow / mass < best:
                best, best_set = flow / mass, s
    return best, best_set


def test_bottleneck_k2(k2_chain):
    assert mb.bottleneck_ratio(k2_chain) == pytest.approx(0.5)


def test_bottleneck_barbell_matches_oracle():
    P = mb.lazy_simple_walk(mb.barbell_graph(10))
    oracle, cut = brute_bottleneck_oracle(P)
    assert mb.bottleneck_ratio(P) == pytest.approx(oracle, abs=1e-12)
    # the bridge cut (one clique side) attains the minimum
    assert cut in ({0, 1, 2, 3, 4}, {5, 6, 7, 8, 9})


def test_bottleneck_cap():
    P = mb.lazy_simple_walk(mb.cycle_graph(25))
    with pytest.raises(CapabilityError):
        mb.bottleneck_ratio(P)


def test_cheeger_sandwich_small():
    for P in (mb.lazy_simple_walk(mb.cycle_graph(8)),
              mb.max_degree_walk(mb.barbell_graph(8)),
              mb.metropolis_walk(mb.path_graph(5), np.full(5, 0.2))):
        phi = mb.bottleneck_ratio(P)
        _, gap = mb.spectral_gap(P)
        assert phi * phi / 2 <= gap + 1e-12
        assert gap <= 2 * phi + 1e-12


# ---------------------------------------------------------------------------
# Visiting probabilities
# ---------------------------------------------------------------------------

def test_visit_k2_one_step(k2_chain):
    stats = mb.visit_probabilities(k2_chain, 1, 2, 1)
    assert stats.p_visit == pytest.approx(0.5)
    assert stats.expected_visits == pytest.approx(0.5)
    assert stats.p_end == pytest.approx(0.5)


def test_visit_zero_steps(k3_chain):
    stats = mb.visit_probabilities(k3_chain, 1, 2, 0)
    assert stats.p_visit == 0.0 and stats.expected_visits == 0.0 and stats.p_end == 0.0
    assert mb.visit_probabilities(k3_chain, 2, 2, 0).p_end == 1.0


def test_visit_k2_two_steps(k2_chain):
    # enumeration of the four two-step trajectories gives 3/4 and 1
    stats = mb.visit_probabilities(k2_chain, 1, 2, 2)
    assert stats.expected_visits == pytest.approx(1.0)
    assert stats.p_visit == pytest.approx(0.75)


def test_visit_enumeration_oracle(path3_chain):
    # brute-force every trajectory of length 4 on the lazy path walk
    P = path3_chain.matrix
    length, u, v = 4, 1, 3
    p_visit = e_visit = p_end = 0.0
    for steps in itertools.product(range(3), repeat=length):
        prob, cur, visits = 1.0, u - 1, 0
        for nxt in steps:
            prob *= P[cur, nxt]
            cur = nxt
            visits += cur == v - 1
        if prob == 0.0:
            continue
        e_visit += prob * visits
        p_visit += prob * (visits > 0)
        p_end += prob * (cur == v - 1)
    stats = mb.visit_probabilities(path3_chain, u, v, length)
    assert stats.p_visit == pytest.approx(p_visit, abs=1e-12)
    assert stats.expected_visits == pytest.approx(e_visit, abs=1e-12)
    assert stats.p_end == pytest.approx(p_end, abs=1e-12)


def test_visit_bounds_and_all_starts():
    P = mb.lazy_simple_walk(mb.barbell_graph(8))
    for ell in (0, 1, 3, 7):
        for v in (1, 4, 8):
            vec = mb.chains.visit_probability_all_starts(P, v, ell)
            for u in range(1, 9):
                stats = mb.visit_probabilities(P, u, v, ell)
                assert stats.p_visit == pytest.approx(vec[u - 1], abs=1e-12)
                assert 0.0 <= stats.p_visit <= 1.0 + 1e-12
                assert stats.p_visit <= stats.expected_visits + 1e-12
                assert stats.expected_visits <= ell + 1e-12


def test_time_reversal_identity():
    for P in (mb.lazy_simple_walk(mb.barbell_graph(6)),
              mb.metropolis_walk(mb.cycle_graph(5), [0.1, 0.1, 0.2, 0.3, 0.3])):
        pi = mb.stationary(P)
        for ell in (1, 2, 5):
            for u in range(1, P.n + 1):
                for v in range(1, P.n + 1):
                    fwd = mb.visit_probabilities(P, u, v, ell).expected_visits
                    bwd = mb.visit_probabilities(P, v, u, ell).expected_visits
                    assert fwd * pi[u - 1] == pytest.approx(bwd * pi[v - 1], abs=1e-10)


# ---------------------------------------------------------------------------
# Walks
# ---------------------------------------------------------------------------

def test_sample_walk_length_zero(k3_chain):
    w = mb.sample_walk(k3_chain, 2, 0, seed=1)
    assert w.vertices == (2,)
    assert w.probability() == 1.0


def test_sample_walk_frequency(k2_chain):
    w = mb.sample_walk(k2_chain, 1, 100_000, seed=11)
    frac = sum(1 for v in w.vertices if v == 2) / len(w.vertices)
    assert abs(frac - 0.5) < 0.01


def test_sample_walk_deterministic(k3_chain):
    a = mb.sample_walk(k3_chain, 1, 50, seed=5)
    b = mb.sample_walk(k3_chain, 1, 50, seed=5)
    assert a.vertices == b.vertices
    assert a.probability() > 0.0


def test_walk_probability(k3_chain, path3_chain):
    assert mb.walk_probability(k3_chain, (2,)) == 1.0
    assert mb.walk_probability(k3_chain, (1, 2, 3)) == pytest.approx(1 / 16)
    assert mb.walk_probability(path3_chain, (1, 3)) == 0.0
    with pytest.raises(InputError):
        mb.walk_probability(k3_chain, ())


def test_make_walk_validates(path3_chain):
    w = mb.make_walk(path3_chain, [1, 2, 3, 2])
    assert w.length == 3 and w.start == 1 and w.end == 2
    with pytest.raises(InputError):
        mb.make_walk(path3_chain, [1, 3])


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def test_chain_json_roundtrip(path3_chain):
    doc = mb.chain_to_json(path3_chain)
    back = mb.chain_from_json(doc)
    assert np.allclose(back.matrix, path3_chain.matrix)
    assert np.allclose(back.pi, path3_chain.pi)
    assert back.graph.edges == path3_chain.graph.edges


def test_chain_json_infers_graph():
    doc = {"n": 2, "rows": [[0.5, 0.5], [0.5, 0.5]]}
    P = mb.chain_from_json(doc)
    assert P.graph.edges == frozenset({(1, 2)})
    assert P.flags.reversible
