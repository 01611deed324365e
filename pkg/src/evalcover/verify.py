"""Cross-checks of the production algorithms against the brute-force oracles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .condition import check_condition1, local_dictators, maximal_cycle_incomparability, union_graph
from .gen import GenParams, Stream, random_profile
from .graph import Decomposition, Graph, biconnected_components
from .oracle import (
    DEFAULT_MAX_VERTICES,
    check_condition1_oracle,
    maximal_cycle_sets_oracle,
    naive_biconnected_components,
    off_cycle_alternatives,
    oracle_union_graph,
)
from .profile import RELAXED, Profile

CHECKS = ("union_graph", "decomposition", "articulation", "condition", "maximal_cycles", "a0")


def edge_families(d: Decomposition) -> set[frozenset]:
    """Components as sets of labelled edges, independent of index order."""
    labels = d.graph.labels
    return {
        frozenset(frozenset((labels[u], labels[w])) for u, w in comp.edges)
        for comp in d.components
    }


def decompositions_agree(fast: Decomposition, slow: Decomposition) -> bool:
    return (
        edge_families(fast) == edge_families(slow)
        and fast.articulation_labels() == slow.articulation_labels()
    )


def graph_agreement(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return decompositions_agree(biconnected_components(g), naive_biconnected_components(g, max_vertices))


@dataclass
class Tally:
    checked: Counter = field(default_factory=Counter)
    mismatched: Counter = field(default_factory=Counter)
    examples: list = field(default_factory=list)
    profiles: int = 0
    passing: int = 0

    def record(self, name: str, ok: bool, p: Profile) -> None:
        self.checked[name] += 1
        if not ok:
            self.mismatched[name] += 1
            if len(self.examples) < 5:
                self.examples.append((name, p))

    @property
    def ok(self) -> bool:
        return not self.mismatched


def verify_profile(p: Profile, tally: Tally, max_vertices: int = DEFAULT_MAX_VERTICES) -> None:
    """Run every production-vs-oracle comparison applicable to ``p``."""
    tally.profiles += 1
    fast_g = union_graph(p)
    slow_g = oracle_union_graph(p)
    tally.record("union_graph", set(map(frozenset, fast_g.labeled_edges())) == set(map(frozenset, slow_g.labeled_edges())), p)

    report = check_condition1(p, mode=RELAXED)
    slow_d = naive_biconnected_components(slow_g, max_vertices)
    tally.record("decomposition", edge_families(report.decomposition) == edge_families(slow_d), p)
    tally.record("articulation", report.decomposition.articulation_labels() == slow_d.articulation_labels(), p)
    tally.record("condition", report.holds == check_condition1_oracle(p, max_vertices), p)
    if report.holds:
        tally.passing += 1
        assignment = local_dictators(p, report)
        sets = list(assignment.maximal_cycle_vertex_sets)
        tally.record(
            "maximal_cycles",
            sets == maximal_cycle_sets_oracle(slow_g, max_vertices)
            and len(sets) == len(report.decomposition.size3plus_indices)
            and maximal_cycle_incomparability(sets),
            p,
        )
        tally.record("a0", assignment.a0 == off_cycle_alternatives(p, max_vertices), p)


def random_profiles(count: int, seed: int, max_vertices: int = 8, max_voters: int = 6):
    """Yield ``count`` varied random profiles with at most ``max_vertices`` alternatives."""
    top = max(3, min(max_vertices, 8))
    rng = Stream(seed)
    for _ in range(count):
        n_alt = 3 + rng.below(top - 2)
        n_vot = 3 + rng.below(max(1, max_voters - 2))
        size_max = 2 + rng.below(min(4, n_alt) - 1)
        bias = (0.0, 0.5, 1.0)[rng.below(3)]
        params = GenParams(n_alt, n_vot, 2, size_max, bias, rng.below(1 << 63))
        yield random_profile(params)
