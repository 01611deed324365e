"""Brute-force, definition-literal checkers for small instances.

Nothing here calls the decomposition in :mod:`evalcover.graph`; only the
``Graph`` container is shared.  Everything is exponential and meant for
graphs of at most a dozen vertices.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import TooLarge
from .graph import BiconnectedComponent, Decomposition, Graph
from .profile import Profile

DEFAULT_MAX_VERTICES = 12

Cycle = tuple[int, ...]


def _guard(g: Graph, max_vertices: int) -> None:
    if len(g.labels) > max_vertices:
        raise TooLarge(f"{len(g.labels)} vertices exceeds the oracle bound of {max_vertices}")


def enumerate_cycles(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[Cycle]:
    """All simple cycles (length >= 3), each once, as vertex index tuples.

    A cycle is reported starting at its smallest vertex and in the direction
    whose second vertex is smaller than its last.
    """
    _guard(g, max_vertices)
    adj = g.adjacency
    n = len(adj)
    found: list[Cycle] = []
    on_path = [False] * n

    def extend(anchor: int, path: list[int]) -> None:
        u = path[-1]
        for w in adj[u]:
            if w == anchor:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > anchor and not on_path[w]:
                on_path[w] = True
                path.append(w)
                extend(anchor, path)
                path.pop()
                on_path[w] = False

    for s in range(n):
        on_path[s] = True
        extend(s, [s])
        on_path[s] = False
    found.sort()
    return found


def oracle_union_graph(p: Profile) -> Graph:
    """Union graph by scanning every pair of alternatives against every voter."""
    pairs = []
    for a, b in combinations(p.alternatives, 2):
        if any(a in ev and b in ev for ev in p.evals):
            pairs.append((a, b))
    used = [a for a in p.alternatives if any(a in pr for pr in pairs)]
    pos = {a: i for i, a in enumerate(used)}
    adj: list[list[int]] = [[] for _ in used]
    for a, b in pairs:
        adj[pos[a]].append(pos[b])
        adj[pos[b]].append(pos[a])
    indptr = np.zeros(len(used) + 1, np.int64)
    np.cumsum([len(x) for x in adj], out=indptr[1:])
    indices = np.array([w for x in adj for w in sorted(x)], dtype=np.int32)
    return Graph(labels=tuple(used), indptr=indptr, indices=indices)


def check_condition1_oracle(p: Profile, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """Every cycle's vertex set is evaluated in full by some voter."""
    g = oracle_union_graph(p)
    labels = g.labels
    covered: dict[frozenset, bool] = {}
    for cyc in enumerate_cycles(g, max_vertices):
        vs = frozenset(labels[i] for i in cyc)
        if vs not in covered:
            covered[vs] = any(vs <= ev for ev in p.evals)
        if not covered[vs]:
            return False
    return True


def _connected(vertices: set[int], edges) -> bool:
    """Whether ``edges`` connects all of ``vertices`` (plain flood fill)."""
    if not vertices:
        return True
    nbrs: dict[int, set[int]] = {v: set() for v in vertices}
    for u, w in edges:
        if u in nbrs and w in nbrs:
            nbrs[u].add(w)
            nbrs[w].add(u)
    start = next(iter(vertices))
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == vertices


def _vertices_of(edges) -> set[int]:
    return {x for e in edges for x in e}


def _has_articulation_vertex(edges) -> bool:
    verts = _vertices_of(edges)
    for a in verts:
        rest = verts - {a}
        if len(rest) >= 2 and not _connected(rest, [e for e in edges if a not in e]):
            return True
    return False


def is_biconnected_subgraph(edges) -> bool:
    """Single edge, or connected with no articulation vertex."""
    edges = list(edges)
    if len(edges) == 1:
        return True
    if not edges:
        return False
    return _connected(_vertices_of(edges), edges) and not _has_articulation_vertex(edges)


def oracle_articulation_vertices(g: Graph) -> frozenset[int]:
    """Vertices ``a`` separating some pair ``b, c`` that is connected while ``a`` is present."""
    edges = g.edges()
    everyone = set(range(len(g.labels)))
    before = {v: k for k, part in enumerate(_components_of(everyone, edges)) for v in part}
    out = set()
    for a in everyone:
        kept = [e for e in edges if a not in e]
        after = {v: k for k, part in enumerate(_components_of(everyone - {a}, kept)) for v in part}
        others = sorted(everyone - {a})
        if any(
            before[b] == before[c] and after[b] != after[c]
            for b, c in combinations(others, 2)
        ):
            out.add(a)
    return frozenset(out)


def _components_of(vertices: set[int], edges) -> list[set[int]]:
    left = set(vertices)
    parts = []
    while left:
        start = left.pop()
        part = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for x, y in edges:
                w = y if x == u else x if y == u else None
                if w is not None and w not in part:
                    part.add(w)
                    frontier.append(w)
        left -= part
        parts.append(part)
    return parts


def naive_biconnected_components(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Decomposition:
    """Edge classes under "equal, or together on some simple cycle".

    Each class is checked to be biconnected, and no union of two classes may
    be biconnected (maximality).  Raises ``AssertionError`` if either check
    fails, which would mean the definitions disagree with each other.
    """
    edges = g.edges()
    cls = {e: {e} for e in edges}
    for cyc in enumerate_cycles(g, max_vertices):
        ring = [tuple(sorted((cyc[k], cyc[(k + 1) % len(cyc)]))) for k in range(len(cyc))]
        merged = set().union(*(cls[e] for e in ring))
        for e in merged:
            cls[e] = merged
    classes = []
    seen = set()
    for e in edges:
        key = id(cls[e])
        if key not in seen:
            seen.add(key)
            classes.append(sorted(cls[e]))

    for c in classes:
        assert is_biconnected_subgraph(c), f"class {c} is not biconnected"
    for c1, c2 in combinations(classes, 2):
        if _vertices_of(c1) & _vertices_of(c2):
            assert not is_biconnected_subgraph(c1 + c2), f"classes {c1} and {c2} merge"

    classes.sort(key=lambda c: c[0])
    comps = tuple(
        BiconnectedComponent(edges=tuple(c), vertices=frozenset(_vertices_of(c))) for c in classes
    )
    return Decomposition.from_components(g, comps, oracle_articulation_vertices(g))


def maximal_cycle_sets_oracle(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[frozenset]:
    """Inclusion-maximal vertex sets among all cycles, as label sets.

    Sorted by the ascending index tuples of their vertices.
    """
    vsets = {frozenset(c) for c in enumerate_cycles(g, max_vertices)}
    maximal = [s for s in vsets if not any(s < t for t in vsets)]
    for s, t in combinations(maximal, 2):
        assert s - t and t - s
    assert set().union(*maximal) == set().union(*vsets)
    maximal.sort(key=sorted)
    labels = g.labels
    return [frozenset(labels[i] for i in s) for s in maximal]


def off_cycle_alternatives(p: Profile, max_vertices: int = DEFAULT_MAX_VERTICES) -> frozenset[str]:
    """Alternatives of ``p`` that lie on no cycle of the union graph."""
    g = oracle_union_graph(p)
    on = {g.labels[i] for c in enumerate_cycles(g, max_vertices) for i in c}
    return frozenset(a for a in p.alternatives if a not in on)
