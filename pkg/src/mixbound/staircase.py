"""Hidden-walk ("staircase") instances for black-box local search.

An instance is a walk of length L from vertex 1 plus a hidden bit. Its
value function decreases along the walk (by last occurrence) and equals
the BFS distance to vertex 1 off the walk, so the walk's end is the
unique local minimum. The decision variant tags every vertex with -1
except the end of the walk, which carries the hidden bit.

Walks are cut into segments of T steps; every T-th vertex is a milestone
and a walk is "good" when its milestones are all distinct. T defaults to
the chain's mixing time at eps = sigma/(2n) and the number of segments
defaults to floor(sqrt(n)).
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .chains import (
    TransitionMatrix,
    Walk,
    chain_from_spec,
    make_walk,
    mixing_time,
    sample_walk,
    stationary_ratio,
)
from .errors import CapabilityError, InputError, VacuousRegimeWarning
from .graphs import Graph, _check_vertex, bfs_distances, graph_from_spec

GOOD_WALK_RETRY_CAP = 10 ** 4


@dataclass(frozen=True)
class StaircaseParams:
    """Segment length T, walk length L = m*T, and chain context."""

    T: int
    L: int
    m: int
    n: int
    sigma: float
    is_default: bool = True

    def __post_init__(self):
        if self.T < 1 or self.m < 0:
            raise InputError(f"need T >= 1 and m >= 0, got T={self.T}, m={self.m}")
        if self.L != self.m * self.T:
            raise InputError(f"L={self.L} is not m*T={self.m * self.T}")


def default_params(P: TransitionMatrix, mixing_cap: int | None = None) -> StaircaseParams:
    """T = mixing time at eps = sigma/(2n), L = floor(sqrt(n)) * T.

    Warns when n < 16 sigma^2: the construction still works there but the
    lower-bound guarantee is vacuous.
    """
    flags = P.flags
    if not (flags.lazy and flags.irreducible and flags.reversible):
        raise CapabilityError(
            f"default parameters need a lazy irreducible reversible chain, got {flags}")
    sigma = stationary_ratio(P)
    n = P.n
    eps = sigma / (2 * n)
    if eps >= 0.5:
        raise CapabilityError(
            f"eps = sigma/(2n) = {eps:.4g} >= 1/2; chain too heterogeneous for n={n}")
    _warn_if_vacuous(n, sigma)
    kwargs = {} if mixing_cap is None else {"cap": mixing_cap}
    T = mixing_time(P, eps, **kwargs)
    T = max(T, 1)
    m = math.isqrt(n)
    return StaircaseParams(T=T, L=m * T, m=m, n=n, sigma=sigma, is_default=True)


def custom_params(P: TransitionMatrix, T: int, L: int) -> StaircaseParams:
    """Explicit T and L (T must divide L); flagged non-default."""
    if T < 1:
        raise InputError(f"T must be >= 1, got {T}")
    if L < 0 or L % T != 0:
        raise InputError(f"L={L} must be a nonnegative multiple of T={T}")
    sigma = stationary_ratio(P)
    _warn_if_vacuous(P.n, sigma)
    return StaircaseParams(T=T, L=L, m=L // T, n=P.n, sigma=sigma, is_default=False)


def _warn_if_vacuous(n: int, sigma: float) -> None:
    if n < 16 * sigma * sigma:
        warnings.warn(
            f"n={n} < 16*sigma^2={16 * sigma * sigma:.3g}: the lower-bound "
            "guarantee is vacuous at this size (construction still valid)",
            VacuousRegimeWarning, stacklevel=3)


# ---------------------------------------------------------------------------
# Milestones, heads and tails
# ---------------------------------------------------------------------------

def _vertices(w) -> tuple[int, ...]:
    return w.vertices if isinstance(w, Walk) else tuple(w)


def _segments(verts: tuple[int, ...], T: int) -> int:
    steps = len(verts) - 1
    if T < 1:
        raise InputError(f"T must be >= 1, got {T}")
    if steps % T != 0:
        raise InputError(f"segment length {T} does not divide walk length {steps}")
    return steps // T


def milestones(w, T: int) -> tuple[int, ...]:
    """Every T-th vertex, including the start and the end."""
    verts = _vertices(w)
    m = _segments(verts, T)
    return tuple(verts[j * T] for j in range(m + 1))


def is_good_walk(w, T: int) -> bool:
    """True when all milestones are distinct."""
    stones = milestones(w, T)
    return len(set(stones)) == len(stones)


def head(w, j: int, T: int) -> tuple[int, ...]:
    """Prefix through the j-th milestone: vertices 0..j*T."""
    verts = _vertices(w)
    m = _segments(verts, T)
    if not 0 <= j <= m:
        raise InputError(f"head index {j} out of range 0..{m}")
    return verts[: j * T + 1]


def tail(w, j: int, T: int) -> tuple[int, ...]:
    """Vertices strictly after the j-th milestone: j*T+1 .. L."""
    verts = _vertices(w)
    m = _segments(verts, T)
    if not 0 <= j <= m:
        raise InputError(f"tail index {j} out of range 0..{m}")
    return verts[j * T + 1:]


def tail_segment(w, j1: int, j2: int, T: int) -> tuple[int, ...]:
    """Vertices j1*T+1 .. j2*T (between two milestones)."""
    verts = _vertices(w)
    m = _segments(verts, T)
    if not 0 <= j1 <= j2 <= m:
        raise InputError(f"need 0 <= j1 <= j2 <= {m}, got j1={j1}, j2={j2}")
    return verts[j1 * T + 1: j2 * T + 1]


def shared_head_index(x, y, T: int) -> int:
    """Largest j with equal heads. Both walks must have the same length and
    the same start, so the result is always >= 0."""
    xv, yv = _vertices(x), _vertices(y)
    if len(xv) != len(yv):
        raise InputError("walks must have the same length")
    m = _segments(xv, T)
    if xv[0] != yv[0]:
        raise InputError("walks must share their starting vertex")
    j = 0
    while j < m and xv[j * T + 1:(j + 1) * T + 1] == yv[j * T + 1:(j + 1) * T + 1]:
        j += 1
    return j


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StaircaseInstance:
    """A hidden walk with a hidden bit, evaluable as a query oracle.

    Values are derived lazily from the walk, its last-occurrence map, and
    BFS distances, so nothing of size n is materialized until an off-walk
    vertex is queried.
    """

    walk: Walk
    bit: int
    params: StaircaseParams
    seed: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise InputError(f"hidden bit must be 0 or 1, got {self.bit}")
        if self.walk.start != 1:
            raise InputError("instance walks must start at vertex 1")
        if self.walk.length != self.params.L:
            raise InputError(
                f"walk has {self.walk.length} steps, parameters require {self.params.L}")

    @property
    def chain(self) -> TransitionMatrix:
        return self.walk.chain

    @property
    def graph(self) -> Graph:
        return self.walk.chain.graph

    @property
    def minimum(self) -> int:
        """The walk's final vertex, the unique local minimum."""
        return self.walk.end

    @cached_property
    def last_occurrence(self) -> dict[int, int]:
        occ: dict[int, int] = {}
        for i, v in enumerate(self.walk.vertices):
            occ[v] = i
        return occ

    @cached_property
    def distances(self) -> list[int]:
        return bfs_distances(self.graph, 1)

    def value(self, v: int) -> int:
        """Search-problem value: minus the last occurrence index on the
        walk, BFS distance to vertex 1 off it."""
        _check_vertex(self.graph, v)
        last = self.last_occurrence.get(int(v))
        if last is not None:
            return -last
        return self.distances[v - 1]

    def decision_value(self, v: int) -> tuple[int, int]:
        """Decision-problem value: (value, hidden bit) at the walk's end,
        (value, -1) everywhere else."""
        val = self.value(v)
        tag = self.bit if int(v) == self.walk.end else -1
        return val, tag


def make_instance(walk: Walk, bit: int, params: StaircaseParams,
                  seed: int | None = None) -> StaircaseInstance:
    return StaircaseInstance(walk=walk, bit=int(bit), params=params, seed=seed)


def sample_good_walk(P: TransitionMatrix, params: StaircaseParams, seed,
                     retry_cap: int = GOOD_WALK_RETRY_CAP) -> Walk:
    """Rejection-sample the chain law from vertex 1 conditioned on distinct
    milestones."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(retry_cap):
        w = sample_walk(P, 1, params.L, rng)
        if is_good_walk(w, params.T):
            return w
    raise CapabilityError(
        f"no good walk found in {retry_cap} attempts (L={params.L}, T={params.T}); "
        "the chain may be too heterogeneous or the graph too small")


def sample_instance(P: TransitionMatrix, params: StaircaseParams, seed,
                    retry_cap: int = GOOD_WALK_RETRY_CAP) -> StaircaseInstance:
    """A good walk plus a fair hidden bit, all from one seeded stream."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    walk = sample_good_walk(P, params, rng, retry_cap=retry_cap)
    bit = int(rng.integers(2))
    stored_seed = seed if isinstance(seed, int) else None
    return make_instance(walk, bit, params, seed=stored_seed)


# ---------------------------------------------------------------------------
# Validity and local minima
# ---------------------------------------------------------------------------

def _as_function(f, n: int):
    if callable(f):
        return f
    return lambda v: f[v]


def is_valid_value_function(g: Graph, walk, f) -> bool:
    """Check the three conditions tying a value function to a walk:
    strictly decreasing in last-occurrence order along the walk, equal to
    the distance from the walk's start (and positive) off the walk, and
    nonpositive on the walk."""
    verts = _vertices(walk)
    fn = _as_function(f, g.n)
    last: dict[int, int] = {}
    for i, v in enumerate(verts):
        last[v] = i
    by_last = sorted(last, key=last.get)
    for a, b in zip(by_last, by_last[1:]):
        if not fn(a) > fn(b):  # a's last occurrence precedes b's
            return False
    dist = bfs_distances(g, verts[0])
    on_walk = set(verts)
    for v in range(1, g.n + 1):
        if v in on_walk:
            if fn(v) > 0:
                return False
        elif fn(v) != dist[v - 1] or fn(v) <= 0:
            return False
    return True


def local_minima(g: Graph, f) -> list[int]:
    """All vertices whose value is <= every neighbor's value."""
    fn = _as_function(f, g.n)
    out = []
    for v in range(1, g.n + 1):
        fv = fn(v)
        if all(fv <= fn(u) for u in g.neighbors(v)):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def instance_to_json(inst: StaircaseInstance, graph_ref: str, chain_ref: str,
                     reveal: bool = False) -> dict:
    doc = {
        "graph": graph_ref,
        "chain": chain_ref,
        "T": inst.params.T,
        "L": inst.params.L,
        "walk": list(inst.walk.vertices),
        "b": inst.bit,
        "seed": inst.seed,
    }
    if reveal:
        doc["f_values"] = [inst.value(v) for v in range(1, inst.graph.n + 1)]
    return doc


def instance_from_json(doc: dict) -> StaircaseInstance:
    try:
        graph_ref = doc["graph"]
        chain_ref = doc["chain"]
        T, L = int(doc["T"]), int(doc["L"])
        walk_vertices = doc["walk"]
        bit = int(doc["b"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed instance document: {exc}") from exc
    g = graph_from_spec(graph_ref, seed=doc.get("seed"))
    chain = chain_from_spec(chain_ref, g)
    params = custom_params(chain, T=T, L=L)
    walk = make_walk(chain, walk_vertices)
    return make_instance(walk, bit, params, seed=doc.get("seed"))


def load_instance(path: str) -> StaircaseInstance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_json(json.load(fh))
