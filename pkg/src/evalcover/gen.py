"""Seeded random profiles and connected graphs.

Randomness comes only from the raw 64-bit output of numpy's PCG64 bit
generator (PCG-XSL-RR 128/64) seeded with the given integer.  Bounded
integers are derived by rejection sampling on those raw words, so the
streams do not depend on numpy's distribution code and stay reproducible
across numpy releases.  ``GENERATOR_VERSION`` changes whenever a sampling
procedure changes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .condition import check_condition1
from .errors import ParamInvalid
from .graph import Graph, graph_from_index_edges
from .profile import RELAXED, Profile

GENERATOR_VERSION = 1
_U64 = 1 << 64


class Stream:
    """Bounded draws from a PCG64 raw-word stream."""

    def __init__(self, seed: int):
        if not 0 <= seed < _U64:
            raise ParamInvalid(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._bits = np.random.PCG64(seed)

    def raw(self, size: int) -> np.ndarray:
        return self._bits.random_raw(size).astype(np.uint64)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        limit = _U64 - _U64 % bound
        while True:
            x = int(self._bits.random_raw())
            if x < limit:
                return x % bound

    def below_many(self, bounds: np.ndarray) -> np.ndarray:
        """Independent uniform draws in ``[0, bounds[k])``, vectorized."""
        bounds = np.asarray(bounds, dtype=np.uint64)
        out = np.empty(len(bounds), dtype=np.uint64)
        # 2**64 mod b, computed without overflowing uint64
        rem = (np.uint64(_U64 - 1) % bounds + np.uint64(1)) % bounds
        limit = np.uint64(0) - rem  # wraps to 2**64 - rem; 0 means "accept all"
        todo = np.arange(len(bounds))
        while len(todo):
            x = self.raw(len(todo))
            ok = (limit[todo] == 0) | (x < limit[todo])
            out[todo[ok]] = x[ok] % bounds[todo[ok]]
            todo = todo[~ok]
        return out.astype(np.int64)

    def unit(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (int(self._bits.random_raw()) >> 11) * 2.0**-53

    def sample(self, items: list, k: int) -> list:
        """``k`` distinct items via a partial Fisher-Yates shuffle."""
        pool = list(items)
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


@dataclass(frozen=True)
class GenParams:
    n_alternatives: int
    n_voters: int
    eval_size_min: int = 2
    eval_size_max: int = 3
    coverage_bias: float = 0.0
    seed: int = 0

    def validate(self) -> GenParams:
        if self.n_alternatives < 1 or self.n_voters < 1:
            raise ParamInvalid("n_alternatives and n_voters must be positive")
        if self.eval_size_min < 2:
            raise ParamInvalid("eval_size_min must be at least 2")
        if self.eval_size_min > self.eval_size_max:
            raise ParamInvalid("eval_size_min exceeds eval_size_max")
        if self.eval_size_max > self.n_alternatives:
            raise ParamInvalid("eval_size_max exceeds n_alternatives")
        if not 0.0 <= self.coverage_bias <= 1.0:
            raise ParamInvalid("coverage_bias must lie in [0, 1]")
        if not 0 <= self.seed < _U64:
            raise ParamInvalid("seed must be a 64-bit unsigned integer")
        return self


def random_profile(params: GenParams) -> Profile:
    """Random evaluation sets, optionally steered toward passing instances.

    Each voter evaluates a uniformly sized, uniformly chosen subset.  Then
    every component with three or more vertices that no voter covers is, with
    probability ``coverage_bias``, given a covering voter: one of the voters
    whose evaluation set lies inside the component has its set replaced by
    the component's vertex set.  Such a swap only adds chords inside that
    component, so the other components are unaffected.  A covering set may be
    larger than ``eval_size_max``.
    """
    params.validate()
    rng = Stream(params.seed)
    alts = [f"a{i + 1}" for i in range(params.n_alternatives)]
    voters = [f"v{k + 1}" for k in range(params.n_voters)]
    span = params.eval_size_max - params.eval_size_min + 1
    evals = []
    for _ in voters:
        size = params.eval_size_min + rng.below(span)
        evals.append(frozenset(rng.sample(alts, size)))
    p = Profile(tuple(alts), tuple(voters), tuple(evals))

    if params.coverage_bias > 0.0:
        r = check_condition1(p, mode=RELAXED)
        for fail in r.failures:
            if rng.unit() >= params.coverage_bias:
                continue
            inside = [k for k, ev in enumerate(evals) if len(ev) >= 2 and ev <= fail.vertices]
            k = inside[rng.below(len(inside))]
            evals[k] = fail.vertices
        p = Profile(tuple(alts), tuple(voters), tuple(evals))
    return p


def random_connected_graph(n_vertices: int, n_edges: int, seed: int) -> Graph:
    """Random spanning tree plus uniformly chosen extra edges.

    The tree attaches the ``i``-th vertex of a random permutation to a uniform
    earlier one.  Extra edges are drawn uniformly among the pairs not yet
    present.  Vertices are labelled ``0..n_vertices-1``.
    """
    n, m = n_vertices, n_edges
    if n < 2:
        raise ParamInvalid("need at least 2 vertices")
    total = n * (n - 1) // 2
    if not n - 1 <= m <= total:
        raise ParamInvalid(f"n_edges must lie in [{n - 1}, {total}] for {n} vertices")
    rng = Stream(seed)

    perm = np.arange(n)
    swaps = rng.below_many(np.arange(n, 1, -1))
    for i, j in enumerate(swaps.tolist()):
        j += i
        perm[i], perm[j] = perm[j], perm[i]
    parents = perm[rng.below_many(np.arange(1, n))]
    children = perm[1:]
    lo = np.minimum(parents, children)
    hi = np.maximum(parents, children)
    codes = lo * n + hi
    present = set(codes.tolist())

    extra = m - (n - 1)
    if extra and total <= 4 * m:
        pool = np.array(
            [u * n + w for u in range(n) for w in range(u + 1, n) if u * n + w not in present],
            dtype=np.int64,
        )
        chosen = []
        for i in range(extra):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
            chosen.append(int(pool[i]))
        codes = np.concatenate([codes, np.array(chosen, dtype=np.int64)])
    elif extra:
        chosen = []
        while len(chosen) < extra:
            need = extra - len(chosen)
            batch = 2 * need + 16
            u = rng.below_many(np.full(batch, n))
            w = rng.below_many(np.full(batch, n))
            for a, b in zip(u.tolist(), w.tolist()):
                if a == b:
                    continue
                c = a * n + b if a < b else b * n + a
                if c not in present:
                    present.add(c)
                    chosen.append(c)
                    if len(chosen) == extra:
                        break
        codes = np.concatenate([codes, np.array(chosen, dtype=np.int64)])
    return graph_from_index_edges(n, codes // n, codes % n)
