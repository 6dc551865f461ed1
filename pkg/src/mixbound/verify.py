"""Executable verification suite for the package's mathematical claims.

Every invariant of the library has a named check here: the appendix-style
helper facts (A1-A9), the spectral/bottleneck inequality chain (B1, B2,
and the spectral mixing bound), and the module-level invariants (graph
generators, chain constructions, adversary symmetries, solver behavior).
Each check reports pass/fail with a counterexample dump on failure; the
CLI exposes the suite as `mixbound verify`.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import adversary as adv
from . import chains as ch
from . import graphs as gr
from . import solvers as sv
from . import staircase as st
from .errors import VacuousRegimeWarning


@dataclass(frozen=True)
class VerifyCaps:
    """Size and effort limits for the verification suite."""

    max_n: int = 12
    instances: int = 500
    reversal_n: int = 10
    reversal_len: int = 10
    visit_sum_n: int = 8
    visit_sum_len: int = 8
    escape_sizes: tuple[int, ...] = (16, 25)
    escape_samples: int = 10_000
    ratio_subsets: int = 200
    mc_samples: int = 20_000
    expansion_cap: int = 20
    enumeration_cap: int = 10 ** 7
    mixing_cap: int = 10 ** 6

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n, "instances": self.instances,
            "reversal_n": self.reversal_n, "reversal_len": self.reversal_len,
            "visit_sum_n": self.visit_sum_n, "visit_sum_len": self.visit_sum_len,
            "escape_sizes": list(self.escape_sizes),
            "escape_samples": self.escape_samples,
            "ratio_subsets": self.ratio_subsets, "mc_samples": self.mc_samples,
            "expansion_cap": self.expansion_cap,
            "enumeration_cap": self.enumeration_cap, "mixing_cap": self.mixing_cap,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str
    counterexample: dict | None = None

    def to_json(self) -> dict:
        doc = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


class _Context:
    """Shared lazily-built fixtures so checks do not redo expensive work."""

    def __init__(self, caps: VerifyCaps, seed: int):
        self.caps = caps
        self.seed = seed
        self._chains: list[tuple[str, str, ch.TransitionMatrix]] | None = None
        self._params: dict[int, st.StaircaseParams] = {}
        self._instances: list[st.StaircaseInstance] | None = None
        self._micro_systems: list[tuple[ch.TransitionMatrix, st.StaircaseParams]] | None = None

    def family_graphs(self) -> list[tuple[str, gr.Graph]]:
        candidates = [
            ("cycle", gr.cycle_graph(9)),
            ("path", gr.path_graph(8)),
            ("complete", gr.complete_graph(9)),
            ("hypercube", gr.hypercube_graph(3)),
            ("torus2d", gr.torus_graph(3, 3)),
            ("barbell", gr.barbell_graph(10)),
            ("random_regular", gr.random_regular_graph(8, 3, seed=self.seed)),
        ]
        return [(name, g) for name, g in candidates if g.n <= self.caps.max_n]

    def test_chains(self) -> list[tuple[str, str, ch.TransitionMatrix]]:
        if self._chains is None:
            out = []
            for gname, g in self.family_graphs():
                out.append((gname, "lazy-simple", ch.lazy_simple_walk(g)))
                out.append((gname, "metropolis", ch.metropolis_walk(
                    g, np.full(g.n, 1.0 / g.n))))
                out.append((gname, "max-degree", ch.max_degree_walk(g)))
            self._chains = out
        return self._chains

    def default_params(self, P: ch.TransitionMatrix) -> st.StaircaseParams:
        key = id(P)
        if key not in self._params:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", VacuousRegimeWarning)
                self._params[key] = st.default_params(P, mixing_cap=self.caps.mixing_cap)
        return self._params[key]

    def instances(self) -> list[st.StaircaseInstance]:
        """`caps.instances` seeded staircase instances spread over every
        (family, chain construction) combination."""
        if self._instances is None:
            chains = self.test_chains()
            per = math.ceil(self.caps.instances / len(chains))
            out = []
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", VacuousRegimeWarning)
                for idx, (_, _, P) in enumerate(chains):
                    params = self.default_params(P)
                    for k in range(per):
                        if len(out) >= self.caps.instances:
                            break
                        rng = np.random.default_rng((self.seed, idx, k))
                        out.append(st.sample_instance(P, params, rng))
            self._instances = out
        return self._instances

    def micro_systems(self) -> list[tuple[ch.TransitionMatrix, st.StaircaseParams]]:
        """Enumerable adversary systems: K3 with T=1, L=2 and K4 at its
        default parameters."""
        if self._micro_systems is None:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", VacuousRegimeWarning)
                P3 = ch.lazy_simple_walk(gr.complete_graph(3))
                p3 = st.custom_params(P3, T=1, L=2)
                P4 = ch.lazy_simple_walk(gr.complete_graph(4))
                p4 = st.default_params(P4)
            self._micro_systems = [(P3, p3), (P4, p4)]
        return self._micro_systems


def _fail(name: str, details: str, counterexample: dict) -> CheckResult:
    return CheckResult(name=name, passed=False, details=details,
                       counterexample=counterexample)


def _ok(name: str, details: str) -> CheckResult:
    return CheckResult(name=name, passed=True, details=details)


# ---------------------------------------------------------------------------
# A-series checks
# ---------------------------------------------------------------------------

def check_a1_validity(ctx: _Context) -> CheckResult:
    """Sampled instance value functions are valid for their walks."""
    name = "A1_validity"
    for inst in ctx.instances():
        if not st.is_valid_value_function(inst.graph, inst.walk, inst.value):
            return _fail(name, "instance value function failed validity",
                         {"walk": list(inst.walk.vertices), "bit": inst.bit})
    return _ok(name, f"{len(ctx.instances())} instances valid")


def check_a2_mixing_concentration(ctx: _Context) -> CheckResult:
    """After T = t_mix(sigma/2n) steps no vertex holds more than 2 sigma/n
    probability, from any start."""
    name = "A2_mixing_concentration"
    for gname, kind, P in ctx.test_chains():
        sigma = ch.stationary_ratio(P)
        T = ctx.default_params(P).T
        power = np.linalg.matrix_power(P.matrix, T)
        limit = 2.0 * sigma / P.n + 1e-12
        if power.max() > limit:
            u, v = np.unravel_index(int(power.argmax()), power.shape)
            return _fail(name, "T-step probability exceeds 2*sigma/n",
                         {"graph": gname, "chain": kind, "u": int(u + 1),
                          "v": int(v + 1), "value": float(power.max()),
                          "limit": limit})
    return _ok(name, f"{len(ctx.test_chains())} chains concentrated")


def check_a3_visit_sum(ctx: _Context) -> CheckResult:
    """Sum of visit probabilities into a fixed vertex over any start subset
    is at most len * sigma."""
    name = "A3_visit_sum"
    chains = [(g, k, P) for g, k, P in ctx.test_chains() if P.n <= ctx.caps.visit_sum_n]
    for gname, kind, P in chains:
        sigma = ch.stationary_ratio(P)
        n = P.n
        subset_matrix = np.array(
            [[(mask >> u) & 1 for u in range(n)] for mask in range(1, 1 << n)],
            dtype=float)
        for v in range(1, n + 1):
            for ell in range(ctx.caps.visit_sum_len + 1):
                visits = ch.visit_probability_all_starts(P, v, ell)
                worst = float((subset_matrix @ visits).max())
                if worst > ell * sigma + 1e-9:
                    return _fail(name, "subset visit sum exceeds len*sigma",
                                 {"graph": gname, "chain": kind, "v": v,
                                  "len": ell, "sum": worst, "limit": ell * sigma})
    return _ok(name, f"{len(chains)} chains, all subsets within bound")


def check_a4_milestone_escape(ctx: _Context) -> CheckResult:
    """On complete graphs at default T, each segment's probability of
    staying good while diverging exactly there clears 2^(-4 sigma) within
    Monte Carlo error."""
    name = "A4_milestone_escape"
    details = []
    for size in ctx.caps.escape_sizes:
        P = ch.lazy_simple_walk(gr.complete_graph(size))
        params = ctx.default_params(P)
        sigma = params.sigma
        floor = 2.0 ** (-4.0 * sigma)
        estimates = adv.milestone_escape_estimates(
            P, params, ctx.caps.escape_samples, seed=(ctx.seed, size))
        for j, (p_hat, se) in enumerate(estimates):
            if p_hat < floor - 3.0 * se:
                return _fail(name, "segment escape estimate below 2^(-4 sigma)",
                             {"n": size, "segment": j, "estimate": p_hat,
                              "std_error": se, "floor": floor})
        details.append(f"n={size}: min {min(p for p, _ in estimates):.3f}")
    return _ok(name, "; ".join(details) + f" vs floor {floor:.4f}")


def check_a5_difference_localization(ctx: _Context) -> CheckResult:
    """(i) Two distinct-walk functions can only disagree inside the two
    tails after their shared head; (ii) the per-vertex distinguishing mass
    is at most twice the weight of pairs whose second tail covers the
    vertex. Exhaustive over the micro-systems."""
    name = "A5_difference_localization"
    pair_count = 0
    for P, params in ctx.micro_systems():
        T = params.T
        family = adv.enumerate_family(P, params, cap=ctx.caps.enumeration_cap)
        insts = family.instances
        for a, b in itertools.product(insts, insts):
            if a.walk.vertices == b.walk.vertices:
                continue
            pair_count += 1
            j = st.shared_head_index(a.walk, b.walk, T)
            region = set(st.tail(a.walk, j, T)) | set(st.tail(b.walk, j, T))
            for v in range(1, P.n + 1):
                if a.decision_value(v) != b.decision_value(v) and v not in region:
                    return _fail(name, "difference outside the two tails",
                                 {"x": list(a.walk.vertices), "y": list(b.walk.vertices),
                                  "bits": [a.bit, b.bit], "vertex": v, "J": j})
        # factor-2 bound, on the full family
        system = adv._system(family)
        rhs = np.zeros(P.n)
        for i, k, r, _ in system.pair_records():
            jk = system._shared_index(i, k)
            for v in set(system.walk_verts[k][jk * T + 1:]):
                rhs[v - 1] += r
        per_vertex = np.array(adv.distinguishing_mass(family).per_vertex)
        if np.any(per_vertex > 2.0 * rhs + 1e-12):
            v = int(np.argmax(per_vertex - 2.0 * rhs)) + 1
            return _fail(name, "factor-2 bound violated",
                         {"n": P.n, "vertex": v, "q_tilde": float(per_vertex[v - 1]),
                          "rhs": float(2.0 * rhs[v - 1])})
    return _ok(name, f"{pair_count} ordered pairs localized; factor-2 bound holds")


def check_a6_witness_existence(ctx: _Context) -> CheckResult:
    """The constructive witness yields two good walks sharing the
    next-to-last head with positive distinguishing mass, on chains large
    enough for the guarantee."""
    name = "A6_witness_existence"
    cases = [
        ("complete16", ch.lazy_simple_walk(gr.complete_graph(16))),
        ("hypercube4", ch.lazy_simple_walk(gr.hypercube_graph(4))),
        ("hypercube4-maxdeg", ch.max_degree_walk(gr.hypercube_graph(4))),
    ]
    for label, P in cases:
        params = ctx.default_params(P)
        pair = adv.witness_pair(P, params)
        x, y = pair.instances
        j = st.shared_head_index(x.walk, y.walk, params.T)
        q = adv.distinguishing_mass(pair).q
        ok = (j == params.m - 1 and x.walk.end != y.walk.end and q > 0.0
              and st.is_good_walk(x.walk, params.T)
              and st.is_good_walk(y.walk, params.T))
        if not ok:
            return _fail(name, "witness pair malformed",
                         {"case": label, "J": j, "m": params.m, "q": q,
                          "x_end": x.walk.end, "y_end": y.walk.end})
    return _ok(name, f"{len(cases)} chains produced positive-mass witnesses")


def check_a7_monotone_grid(ctx: _Context) -> CheckResult:
    """(1 - y/x)^x is nondecreasing in x on a grid with x >= 2y >= 1."""
    name = "A7_monotone_grid"
    for y in (0.5, 1.0, 1.5, 2.0, 3.0):
        xs = np.arange(2 * y, 2 * y + 20.0001, 0.25)
        vals = (1.0 - y / xs) ** xs
        drops = np.flatnonzero(np.diff(vals) < -1e-12)
        if drops.size:
            i = int(drops[0])
            return _fail(name, "grid value decreased",
                         {"y": y, "x": float(xs[i]), "value": float(vals[i]),
                          "next": float(vals[i + 1])})
    return _ok(name, "nondecreasing on all grid lines")


def check_a8_time_reversal(ctx: _Context) -> CheckResult:
    """pi(u) E_visit(u,v,len) = pi(v) E_visit(v,u,len) for every pair and
    every length, on all chain constructions."""
    name = "A8_time_reversal"
    chains = [(g, k, P) for g, k, P in ctx.test_chains() if P.n <= ctx.caps.reversal_n]
    worst = 0.0
    for gname, kind, P in chains:
        pi = ch.stationary(P)
        acc = np.zeros_like(P.matrix)
        power = np.eye(P.n)
        for _ in range(1, ctx.caps.reversal_len + 1):
            power = power @ P.matrix
            acc += power
            weighted = pi[:, None] * acc
            gap = float(np.abs(weighted - weighted.T).max())
            worst = max(worst, gap)
            if gap > 1e-10:
                return _fail(name, "time-reversal identity violated",
                             {"graph": gname, "chain": kind, "error": gap})
    return _ok(name, f"{len(chains)} chains, max asymmetry {worst:.2e}")


def check_a9_unique_minimum(ctx: _Context) -> CheckResult:
    """Every sampled instance has exactly one local minimum: the end of
    its walk."""
    name = "A9_unique_minimum"
    for inst in ctx.instances():
        minima = st.local_minima(inst.graph, inst.value)
        if minima != [inst.minimum]:
            return _fail(name, "local minima differ from the walk end",
                         {"walk": list(inst.walk.vertices), "minima": minima})
    return _ok(name, f"{len(ctx.instances())} instances with unique minimum")


# ---------------------------------------------------------------------------
# B-series checks
# ---------------------------------------------------------------------------

def check_b1_cheeger_sandwich(ctx: _Context) -> CheckResult:
    """Phi^2/2 <= 1 - lambda2 <= 2 Phi for every lazy test chain."""
    name = "B1_cheeger_sandwich"
    for gname, kind, P in ctx.test_chains():
        phi = ch.bottleneck_ratio(P, cap=ctx.caps.expansion_cap)
        _, gap = ch.spectral_gap(P)
        if not (phi * phi / 2.0 <= gap + 1e-12 and gap <= 2.0 * phi + 1e-12):
            return _fail(name, "Cheeger sandwich violated",
                         {"graph": gname, "chain": kind, "phi": phi, "gap": gap})
    return _ok(name, f"{len(ctx.test_chains())} chains sandwiched")


def check_b2_expansion_bound(ctx: _Context) -> CheckResult:
    """Phi <= beta * C^2 / d_max for the lazy simple walk, with
    C = d_max/d_min."""
    name = "B2_expansion_bound"
    for gname, g in ctx.family_graphs():
        P = ch.lazy_simple_walk(g)
        phi = ch.bottleneck_ratio(P, cap=ctx.caps.expansion_cap)
        beta = gr.edge_expansion(g, cap=ctx.caps.expansion_cap)
        d_min, d_max, _ = gr.degree_stats(g)
        ratio = d_max / d_min
        limit = beta * ratio * ratio / d_max
        if phi > limit + 1e-12:
            return _fail(name, "bottleneck ratio exceeds expansion bound",
                         {"graph": gname, "phi": phi, "beta": beta,
                          "limit": limit})
    return _ok(name, f"{len(ctx.family_graphs())} lazy simple walks bounded")


def check_b_spectral_mixing(ctx: _Context) -> CheckResult:
    """t_mix(eps) <= ln(1/(eps min pi)) / (1 - lambda2) at eps in
    {1/8, 1/(2n)}."""
    name = "B_spectral_mixing"
    for gname, kind, P in ctx.test_chains():
        pi = ch.stationary(P)
        _, gap = ch.spectral_gap(P)
        for eps in (0.125, 1.0 / (2 * P.n)):
            t = ch.mixing_time(P, eps, cap=ctx.caps.mixing_cap)
            limit = math.log(1.0 / (eps * pi.min())) / gap
            if t > limit:
                return _fail(name, "mixing time exceeds spectral bound",
                             {"graph": gname, "chain": kind, "eps": eps,
                              "t_mix": t, "limit": limit})
    return _ok(name, f"{len(ctx.test_chains())} chains within the spectral bound")


# ---------------------------------------------------------------------------
# Module invariants
# ---------------------------------------------------------------------------

def check_graph_invariants(ctx: _Context) -> CheckResult:
    """Connectivity, brute-force expansion agreement (n <= 10), and the
    triangle inequality on sampled triples."""
    name = "graph_invariants"
    rng = np.random.default_rng(ctx.seed)
    for gname, g in ctx.family_graphs():
        dist_rows = [gr.bfs_distances(g, s) for s in range(1, g.n + 1)]
        if any(d < 0 for d in dist_rows[0]):
            return _fail(name, "graph not connected", {"graph": gname})
        if g.n <= 10:
            beta = gr.edge_expansion(g)
            oracle, _ = gr._min_cut_set(g)
            if abs(beta - oracle) > 1e-12:
                return _fail(name, "edge expansion disagrees with subset oracle",
                             {"graph": gname, "fast": beta, "oracle": oracle})
        for _ in range(50):
            a, b, c = (int(v) for v in rng.integers(1, g.n + 1, size=3))
            if dist_rows[a - 1][c - 1] > dist_rows[a - 1][b - 1] + dist_rows[b - 1][c - 1]:
                return _fail(name, "triangle inequality violated",
                             {"graph": gname, "triple": [a, b, c]})
    return _ok(name, f"{len(ctx.family_graphs())} generated graphs pass")


def check_chain_construction(ctx: _Context) -> CheckResult:
    """Constructed chains are lazy, reversible, irreducible; stationary
    vectors match their closed forms and the generic solver."""
    name = "chain_construction"
    for gname, kind, P in ctx.test_chains():
        flags = ch.check_properties(P)
        if not (flags.lazy and flags.irreducible and flags.reversible):
            return _fail(name, "constructed chain missing a property",
                         {"graph": gname, "chain": kind, "flags": str(flags)})
        if np.diag(P.matrix).min() < 0.5 - 1e-12:
            return _fail(name, "self-loop below 1/2",
                         {"graph": gname, "chain": kind})
        solved = ch._solve_stationary(P.matrix)
        if np.abs(solved - P.pi).max() > 1e-9:
            return _fail(name, "stationary solve disagrees with closed form",
                         {"graph": gname, "chain": kind,
                          "error": float(np.abs(solved - P.pi).max())})
        if kind == "max-degree" and np.abs(P.pi - 1.0 / P.n).max() > 1e-12:
            return _fail(name, "max-degree stationary not uniform",
                         {"graph": gname})
    return _ok(name, f"{len(ctx.test_chains())} constructions validated")


def check_adversary_symmetry(ctx: _Context) -> CheckResult:
    """The relation is exactly symmetric, zero on the diagonal, zero for
    equal bits, and zero when either walk is bad."""
    name = "adversary_symmetry"
    pairs = 0
    for P, params in ctx.micro_systems():
        family = adv.enumerate_family(P, params, cap=ctx.caps.enumeration_cap)
        insts = family.instances
        T = params.T
        for a, b in itertools.product(insts, insts):
            r_ab = adv.relation_weight(a, b)
            pairs += 1
            if r_ab != adv.relation_weight(b, a):
                return _fail(name, "relation not symmetric",
                             {"x": list(a.walk.vertices), "y": list(b.walk.vertices)})
            if a is b and r_ab != 0.0:
                return _fail(name, "relation nonzero on the diagonal",
                             {"x": list(a.walk.vertices)})
            if a.bit == b.bit and r_ab != 0.0:
                return _fail(name, "relation nonzero for equal bits",
                             {"x": list(a.walk.vertices), "y": list(b.walk.vertices)})
            if r_ab != 0.0 and not (st.is_good_walk(a.walk, T)
                                    and st.is_good_walk(b.walk, T)):
                return _fail(name, "relation nonzero for a bad walk",
                             {"x": list(a.walk.vertices), "y": list(b.walk.vertices)})
    return _ok(name, f"{pairs} ordered pairs checked")


def check_adversary_ratio_floor(ctx: _Context) -> CheckResult:
    """Random subsets of an enumerable family keep M(Z)/q(Z) above the
    theoretical floor."""
    name = "adversary_ratio_floor"
    P, params = ctx.micro_systems()[1]  # K4 at default parameters
    result = adv.ratio_property_check(P, params, subsets=ctx.caps.ratio_subsets,
                                      seed=ctx.seed, cap=ctx.caps.enumeration_cap)
    if not result.passed:
        return _fail(name, "subset ratio fell below the floor", result.to_json())
    return _ok(name, f"min ratio {result.min_ratio:.4f} vs floor "
                     f"{result.threshold:.4f} over {result.subsets_checked} subsets")


def check_adversary_exact_mc(ctx: _Context) -> CheckResult:
    """Monte Carlo estimates agree with exact enumeration within three
    standard errors on every enumerable configuration."""
    name = "adversary_exact_mc"
    details = []
    for idx, (P, params) in enumerate(ctx.micro_systems()):
        exact = adv.exact_lower_bound(P, params, cap=ctx.caps.enumeration_cap)
        est = adv.estimate_lower_bound(P, params, samples=ctx.caps.mc_samples,
                                       seed=(ctx.seed, idx))
        if abs(est.M - exact.M) > 3.0 * est.std_error:
            return _fail(name, "Monte Carlo M estimate disagrees with exact value",
                         {"n": P.n, "exact": exact.M, "estimate": est.M,
                          "std_error": est.std_error})
        if abs(est.q - exact.q) > 3.0 * est.q_std_error:
            return _fail(name, "Monte Carlo q estimate disagrees with exact value",
                         {"n": P.n, "exact": exact.q, "estimate": est.q,
                          "std_error": est.q_std_error})
        details.append(f"n={P.n}: M within {abs(est.M - exact.M) / est.std_error:.2f} se")
    return _ok(name, "; ".join(details))


def check_solver_invariants(ctx: _Context) -> CheckResult:
    """All solvers land on the instance minimum, repeat deterministically
    under a fixed seed, reveal the hidden bit in decision mode, and respect
    the steepest-descent query budget."""
    name = "solver_invariants"
    sample = ctx.instances()[:60]
    for inst in sample:
        g = inst.graph
        _, d_max, _ = gr.degree_stats(g)
        res = sv.steepest_descent(sv.search_oracle(inst), g, start=1)
        if res.vertex != inst.minimum:
            return _fail(name, "steepest descent missed the minimum",
                         {"walk": list(inst.walk.vertices), "found": res.vertex})
        budget = 1 + res.moves * d_max + g.degree(res.vertex)
        if res.total_queries > budget:
            return _fail(name, "steepest descent exceeded its query budget",
                         {"total": res.total_queries, "budget": budget})
        r1 = sv.warm_start_descent(sv.search_oracle(inst), g, seed=ctx.seed)
        r2 = sv.warm_start_descent(sv.search_oracle(inst), g, seed=ctx.seed)
        if r1 != r2 or r1.vertex != inst.minimum:
            return _fail(name, "warm-start descent nondeterministic or wrong",
                         {"first": r1.vertex, "second": r2.vertex,
                          "expected": inst.minimum})
        res = sv.exhaustive_search(sv.search_oracle(inst), g)
        if res.vertex != inst.minimum or res.distinct_queries != g.n:
            return _fail(name, "exhaustive search malformed",
                         {"found": res.vertex, "distinct": res.distinct_queries})
        bit, _ = sv.solve_decision(inst)
        if bit != inst.bit:
            return _fail(name, "decision mode failed to reveal the bit",
                         {"expected": inst.bit, "found": bit})
        tagged = [inst.decision_value(v)[1] for v in range(1, g.n + 1)
                  if v != inst.minimum]
        if any(t != -1 for t in tagged):
            return _fail(name, "tag leaked outside the minimum",
                         {"walk": list(inst.walk.vertices)})
    return _ok(name, f"{len(sample)} instances solved by all solvers")


# ---------------------------------------------------------------------------
# Registry and runner
# ---------------------------------------------------------------------------

CHECKS: dict[str, tuple[tuple[str, ...], object]] = {
    "A1_validity": (("lemmas",), check_a1_validity),
    "A2_mixing_concentration": (("lemmas",), check_a2_mixing_concentration),
    "A3_visit_sum": (("lemmas",), check_a3_visit_sum),
    "A4_milestone_escape": (("lemmas", "adversary"), check_a4_milestone_escape),
    "A5_difference_localization": (("lemmas", "adversary"), check_a5_difference_localization),
    "A6_witness_existence": (("lemmas", "adversary"), check_a6_witness_existence),
    "A7_monotone_grid": (("lemmas",), check_a7_monotone_grid),
    "A8_time_reversal": (("lemmas",), check_a8_time_reversal),
    "A9_unique_minimum": (("lemmas",), check_a9_unique_minimum),
    "B1_cheeger_sandwich": (("lemmas",), check_b1_cheeger_sandwich),
    "B2_expansion_bound": (("lemmas",), check_b2_expansion_bound),
    "B_spectral_mixing": (("lemmas",), check_b_spectral_mixing),
    "graph_invariants": ((), check_graph_invariants),
    "chain_construction": ((), check_chain_construction),
    "adversary_symmetry": (("adversary",), check_adversary_symmetry),
    "adversary_ratio_floor": (("adversary",), check_adversary_ratio_floor),
    "adversary_exact_mc": (("adversary",), check_adversary_exact_mc),
    "solver_invariants": ((), check_solver_invariants),
}

SUITES = ("lemmas", "adversary", "all")


def run_verify(suite: str = "all", checks: list[str] | None = None,
               caps: VerifyCaps | None = None, seed: int = 0) -> list[CheckResult]:
    """Run the named checks (or a whole suite) and return their results in
    registry order."""
    caps = caps or VerifyCaps()
    if checks is not None:
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            from .errors import InputError
            raise InputError(f"unknown checks: {unknown}; known: {list(CHECKS)}")
        selected = [c for c in CHECKS if c in set(checks)]
    elif suite == "all":
        selected = list(CHECKS)
    elif suite in SUITES:
        selected = [name for name, (suites, _) in CHECKS.items() if suite in suites]
    else:
        from .errors import InputError
        raise InputError(f"unknown suite {suite!r}; known: {SUITES}")
    ctx = _Context(caps, seed)
    return [CHECKS[name][1](ctx) for name in selected]
