"""Union graphs, the component-cover test, and local dictators.

The condition under test: every cycle of the union graph ``G`` lies inside the
complete graph of some single voter's evaluation set.  It holds exactly when
each biconnected component of ``G`` has its whole vertex set evaluated by one
voter, which is what :func:`check_condition1` checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ConditionViolated
from .graph import Decomposition, Graph, biconnected_components, graph_from_edge_list, is_clique
from .profile import STRICT, Profile

__all__ = [
    "ConditionReport",
    "DictatorAssignment",
    "Failure",
    "voter_graph",
    "union_graph",
    "check_condition1",
    "local_dictators",
    "maximal_cycle_incomparability",
]


def voter_graph(p: Profile, v: str) -> Graph:
    """Complete graph on the alternatives ``v`` evaluates."""
    ev = p.evaluation(v)
    return graph_from_edge_list(combinations(p.sorted_alternatives(ev), 2), order=p.alternatives)


def union_graph(p: Profile) -> Graph:
    """Edge ``ab`` is present iff some voter evaluates both ``a`` and ``b``."""
    pairs = set()
    for ev in p.evals:
        pairs.update(combinations(p.sorted_alternatives(ev), 2))
    return graph_from_edge_list(pairs, order=p.alternatives)


@dataclass(frozen=True)
class Failure:
    """A component whose vertex set no voter evaluates in full."""

    index: int
    vertices: frozenset[str]
    witness: None = None


@dataclass(frozen=True, eq=False)
class ConditionReport:
    holds: bool
    decomposition: Decomposition
    witnesses: dict[int, str]
    failures: tuple[Failure, ...]
    clique_check: dict[int, bool]

    @property
    def components(self) -> Decomposition:
        return self.decomposition


def _component_mask(p: Profile, d: Decomposition, n: int) -> int:
    idx = p.alt_index
    labels = d.graph.labels
    m = 0
    for i in d.components[n].vertices:
        m |= 1 << idx[labels[i]]
    return m


def check_condition1(p: Profile, mode: str = STRICT) -> ConditionReport:
    """Decompose the union graph and look for a covering voter per component.

    Ties go to the voter listed first.  Every uncovered component is reported
    in ``failures``.
    """
    p.validate(mode)
    d = biconnected_components(union_graph(p))
    masks = p.masks
    witnesses: dict[int, str] = {}
    failures = []
    cliques = {}
    for n, comp in enumerate(d.components):
        cliques[n] = is_clique(comp)
        need = _component_mask(p, d, n)
        for k, have in enumerate(masks):
            if need & ~have == 0:
                witnesses[n] = p.voters[k]
                break
        else:
            failures.append(Failure(n, d.vertex_labels(n)))
    return ConditionReport(
        holds=not failures,
        decomposition=d,
        witnesses=witnesses,
        failures=tuple(failures),
        clique_check=cliques,
    )


@dataclass(frozen=True)
class DictatorAssignment:
    dictators: dict[int, str]
    maximal_cycle_vertex_sets: tuple[frozenset[str], ...]
    a0: frozenset[str]
    edge_dictators: dict[tuple[str, str], str] = field(default_factory=dict)

    @property
    def x(self) -> int:
        return len(self.maximal_cycle_vertex_sets)


def local_dictators(p: Profile, r: ConditionReport) -> DictatorAssignment:
    """Assign each component its witness as local dictator.

    The maximal cycles correspond one-to-one to components with three or more
    vertices; their vertex sets are returned ordered by smallest alternative
    index.  ``a0`` collects the alternatives on no cycle, including ones nobody
    evaluates.
    """
    if not r.holds:
        raise ConditionViolated(
            f"{len(r.failures)} component(s) have no covering voter; no dictators exist"
        )
    d = r.decomposition
    idx = p.alt_index
    cycle_sets = [d.vertex_labels(n) for n in d.size3plus_indices]
    cycle_sets.sort(key=lambda s: sorted(idx[a] for a in s))
    on_cycle = frozenset().union(*cycle_sets)

    edge_dictators = {}
    labels = d.graph.labels
    for n in d.size2_indices:
        (u, w), = d.components[n].edges
        edge_dictators[(labels[u], labels[w])] = r.witnesses[n]

    assignment = DictatorAssignment(
        dictators=dict(r.witnesses),
        maximal_cycle_vertex_sets=tuple(cycle_sets),
        a0=frozenset(a for a in p.alternatives if a not in on_cycle),
        edge_dictators=edge_dictators,
    )
    assert maximal_cycle_incomparability(assignment.maximal_cycle_vertex_sets)
    return assignment


def maximal_cycle_incomparability(sets) -> bool:
    """True iff no set in the family is contained in another one."""
    sets = [frozenset(s) for s in sets]
    for x, y in combinations(sets, 2):
        if not (x - y) or not (y - x):
            return False
    return True
