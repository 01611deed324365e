"""Undirected simple graphs, articulation vertices and biconnected components.

A graph is identified with its edge set, so only vertices that are endpoints
of some edge exist.  Vertices carry a label (any hashable) and a dense index;
adjacency is stored in compressed sparse row form with each row sorted.

The decomposition is the depth-first search with low-link values and an edge
stack of Hopcroft and Tarjan (1973).  It runs iteratively with explicit
stacks, compiled with numba, so graphs with 10**5 and more vertices neither
overflow the call stack nor spend seconds in the interpreter.
"""

from __future__ import annotations

import gc
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import numba
import numpy as np

from .errors import SelfLoop

__all__ = [
    "Graph",
    "BiconnectedComponent",
    "Decomposition",
    "graph_from_edge_list",
    "graph_from_index_edges",
    "articulation_vertices",
    "biconnected_components",
    "is_clique",
    "cycle_vertices",
]

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph over dense vertex indices ``0..n-1``.

    ``labels[i]`` is the external label of vertex ``i``; the neighbours of
    ``i`` are ``indices[indptr[i]:indptr[i + 1]]`` in ascending order.
    """

    labels: tuple[Hashable, ...]
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        ptr = self.indptr.tolist()
        idx = self.indices.tolist()
        return tuple(tuple(idx[ptr[i]:ptr[i + 1]]) for i in range(len(self.labels)))

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    __hash__ = None

    def edges(self) -> list[Edge]:
        """All edges as ``(i, j)`` index pairs with ``i < j``, sorted."""
        return [(u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w]

    def labeled_edges(self) -> list[tuple[Hashable, Hashable]]:
        labels = self.labels
        return [(labels[u], labels[w]) for u, w in self.edges()]

    def has_edge(self, a: Hashable, b: Hashable) -> bool:
        idx = self.index
        if a not in idx or b not in idx:
            return False
        u, w = idx[a], idx[b]
        row = self.indices[self.indptr[u]:self.indptr[u + 1]]
        k = int(np.searchsorted(row, w))
        return k < len(row) and row[k] == w


def _csr(n: int, us: np.ndarray, ws: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    src = np.concatenate([us, ws])
    dst = np.concatenate([ws, us])
    order = np.lexsort((dst, src))
    counts = np.bincount(src, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, dst[order].astype(np.int32)


def graph_from_index_edges(
    n: int,
    us: Iterable[int] | np.ndarray,
    ws: Iterable[int] | np.ndarray,
    labels: Sequence[Hashable] | None = None,
) -> Graph:
    """Build a graph on ``0..n-1`` from parallel endpoint arrays.

    Duplicates collapse; every vertex must be an endpoint of some edge.
    """
    us = np.asarray(us, dtype=np.int64)
    ws = np.asarray(ws, dtype=np.int64)
    if np.any(us == ws):
        k = int(np.flatnonzero(us == ws)[0])
        raise SelfLoop((int(us[k]), int(ws[k])))
    if n == 0:
        if len(us):
            raise ValueError("edges given for an empty vertex set")
        return Graph(labels=(), indptr=np.zeros(1, np.int64), indices=np.zeros(0, np.int32))
    lo = np.minimum(us, ws)
    hi = np.maximum(us, ws)
    codes = np.unique(lo * n + hi)
    lo, hi = codes // n, codes % n
    indptr, indices = _csr(n, lo, hi)
    if n and np.any(indptr[1:] == indptr[:-1]):
        raise ValueError("isolated vertex in index edge list")
    return Graph(
        labels=tuple(range(n)) if labels is None else tuple(labels),
        indptr=indptr,
        indices=indices,
    )


def graph_from_edge_list(
    pairs: Iterable[tuple[Hashable, Hashable]],
    order: Sequence[Hashable] | None = None,
) -> Graph:
    """Build a graph from unordered label pairs.

    Duplicate pairs (in either orientation) collapse.  Vertex indices follow
    ``order`` restricted to edge endpoints when given, otherwise the sorted
    labels, so the result does not depend on the order of ``pairs``.
    """
    pairs = list(pairs)
    endpoints: set = set()
    for a, b in pairs:
        if a == b:
            raise SelfLoop((a, b))
        endpoints.add(a)
        endpoints.add(b)

    if order is None:
        labels = sorted(endpoints)
    else:
        labels = [x for x in order if x in endpoints]
        if len(labels) != len(endpoints):
            missing = endpoints.difference(order)
            raise ValueError(f"labels missing from order: {sorted(map(repr, missing))}")
    index = {label: i for i, label in enumerate(labels)}
    us = [index[a] for a, _ in pairs]
    ws = [index[b] for _, b in pairs]
    return graph_from_index_edges(len(labels), us, ws, labels)


@dataclass(frozen=True)
class BiconnectedComponent:
    """One block: its edges as sorted ``(i, j)`` index pairs and its vertex set."""

    edges: tuple[Edge, ...]
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


class Decomposition:
    """Biconnected components of a graph, in canonical order.

    Internally the blocks are stored as one array of edge codes
    ``i * len(graph) + j`` (``i < j``) grouped by block, plus the vertex
    arrays of each block; ``components`` turns them into
    :class:`BiconnectedComponent` objects on first access.
    """

    def __init__(self, graph: Graph, edge_codes, edge_bounds, block_vertices, vertex_bounds, articulation_vertices):
        self.graph = graph
        self.edge_codes = edge_codes
        self.edge_bounds = edge_bounds
        self.block_vertices = block_vertices
        self.vertex_bounds = vertex_bounds
        self.articulation_vertices: frozenset[int] = frozenset(articulation_vertices)
        sizes = np.diff(edge_bounds)
        self.size2_indices: tuple[int, ...] = tuple(np.flatnonzero(sizes == 1).tolist())
        self.size3plus_indices: tuple[int, ...] = tuple(np.flatnonzero(sizes > 1).tolist())

    @classmethod
    def from_components(cls, graph: Graph, components, articulation_vertices) -> Decomposition:
        n = len(graph.labels)
        codes = [u * n + w for c in components for u, w in c.edges]
        verts = [v for c in components for v in sorted(c.vertices)]
        eb = np.cumsum([0] + [len(c.edges) for c in components])
        vb = np.cumsum([0] + [len(c.vertices) for c in components])
        d = cls(graph, np.array(codes, np.int64), eb, np.array(verts, np.int64), vb, articulation_vertices)
        d.__dict__["components"] = tuple(components)
        return d

    def __len__(self) -> int:
        return len(self.edge_bounds) - 1

    @cached_property
    def components(self) -> tuple[BiconnectedComponent, ...]:
        n = len(self.graph.labels)
        paused = gc.isenabled()
        # allocation-heavy: the cyclic collector would rescan the growing heap
        gc.disable()
        try:
            us = (self.edge_codes // max(n, 1)).tolist()
            ws = (self.edge_codes % max(n, 1)).tolist()
            edges = list(zip(us, ws))
            verts = self.block_vertices.tolist()
            eb = self.edge_bounds.tolist()
            vb = self.vertex_bounds.tolist()
            return tuple(
                BiconnectedComponent(
                    edges=tuple(edges[eb[k]:eb[k + 1]]),
                    vertices=frozenset(verts[vb[k]:vb[k + 1]]),
                )
                for k in range(len(eb) - 1)
            )
        finally:
            if paused:
                gc.enable()

    @cached_property
    def edge_to_component(self) -> Mapping[Edge, int]:
        return {e: n for n, comp in enumerate(self.components) for e in comp.edges}

    def vertex_labels(self, n: int) -> frozenset:
        labels = self.graph.labels
        lo, hi = self.vertex_bounds[n], self.vertex_bounds[n + 1]
        return frozenset(labels[i] for i in self.block_vertices[lo:hi].tolist())

    def label_sets(self) -> list[frozenset]:
        return [self.vertex_labels(n) for n in range(len(self))]

    def articulation_labels(self) -> frozenset:
        labels = self.graph.labels
        return frozenset(labels[i] for i in self.articulation_vertices)


@numba.njit(cache=True)
def _bcc_kernel(indptr, indices, disc, low, block, estack, frame_v, frame_i, frame_mark, is_cut):
    """Edge-stack DFS.  Fills ``block`` with the block number of every edge,
    keyed by whichever of its two CSR slots the search traversed (the other
    slot stays -1), and ``is_cut`` with cut-vertex flags; returns the block
    count."""
    n = indptr.shape[0] - 1
    # only discovery times are probed per neighbour; parent, row position and
    # edge-stack mark live in the DFS frames, which are accessed sequentially
    top = 0
    nc = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = t
        low[root] = t
        t += 1
        root_children = 0
        frame_v[0] = root
        frame_i[0] = indptr[root]
        frame_mark[0] = 0
        sp = 1
        while sp > 0:
            f = sp - 1
            u = frame_v[f]
            pu = frame_v[f - 1] if f > 0 else -1
            i = frame_i[f]
            end = indptr[u + 1]
            du = disc[u]
            lu = low[u]
            descended = False
            while i < end:
                w = indices[i]
                dw = disc[w]
                if dw < 0:
                    frame_i[f] = i + 1
                    frame_v[sp] = w
                    frame_i[sp] = indptr[w]
                    frame_mark[sp] = top
                    sp += 1
                    estack[top] = i
                    top += 1
                    disc[w] = t
                    low[w] = t
                    t += 1
                    descended = True
                    break
                if dw < du and w != pu:
                    estack[top] = i
                    top += 1
                    if dw < lu:
                        lu = dw
                i += 1
            low[u] = lu
            if descended:
                continue
            sp -= 1
            if f > 0:
                if lu < low[pu]:
                    low[pu] = lu
                if lu >= disc[pu]:
                    # everything above the tree edge pu-u is one block
                    for j in range(frame_mark[f], top):
                        block[estack[j]] = nc
                    nc += 1
                    top = frame_mark[f]
                    if pu == root:
                        root_children += 1
                    else:
                        is_cut[pu] = True
        if root_children >= 2:
            is_cut[root] = True
    return nc


@numba.njit(cache=True)
def _canonical_blocks(indptr, indices, block, nc):
    """Group edges by block in lexicographic edge order, blocks ordered by
    their smallest edge; also list each block's vertices.  Linear time: the
    CSR rows already enumerate edges lexicographically."""
    n = indptr.shape[0] - 1
    # move block numbers recorded at a (larger, smaller) slot to the
    # (smaller, larger) slot; sorted rows are met in that slot order
    mirror = np.empty(n, np.int64)
    for u in range(n):
        i = indptr[u]
        end = indptr[u + 1]
        while i < end and indices[i] < u:
            i += 1
        mirror[u] = i
    for u in range(n):
        for i in range(indptr[u], indptr[u + 1]):
            w = indices[i]
            if w >= u:
                break
            c = mirror[w]
            mirror[w] = c + 1
            if block[c] < 0:
                block[c] = block[i]

    rank = np.full(nc, -1, np.int64)
    count = np.zeros(nc, np.int64)
    r = 0
    for u in range(n):
        for i in range(indptr[u], indptr[u + 1]):
            if indices[i] > u:
                b = block[i]
                if rank[b] < 0:
                    rank[b] = r
                    r += 1
                count[rank[b]] += 1
    bounds = np.zeros(nc + 1, np.int64)
    for k in range(nc):
        bounds[k + 1] = bounds[k] + count[k]
    fill = bounds[:-1].copy()
    codes = np.empty(bounds[nc], np.int64)
    for u in range(n):
        for i in range(indptr[u], indptr[u + 1]):
            w = indices[i]
            if w > u:
                k = rank[block[i]]
                codes[fill[k]] = u * n + w
                fill[k] += 1

    verts = np.empty(2 * codes.shape[0], np.int64)
    vbounds = np.zeros(nc + 1, np.int64)
    stamp = np.full(n, -1, np.int32)
    vpos = 0
    for k in range(nc):
        for j in range(bounds[k], bounds[k + 1]):
            u = codes[j] // n
            w = codes[j] % n
            if stamp[u] != k:
                stamp[u] = k
                verts[vpos] = u
                vpos += 1
            if stamp[w] != k:
                stamp[w] = k
                verts[vpos] = w
                vpos += 1
        vbounds[k + 1] = vpos
    return codes, bounds, verts[:vpos], vbounds


def _run_kernel(g: Graph):
    n = len(g.labels)
    slots = len(g.indices)
    block = np.full(slots, -1, np.int32)
    is_cut = np.zeros(n, np.bool_)
    nc = _bcc_kernel(
        g.indptr,
        g.indices,
        np.full(n, -1, np.int32),
        np.empty(n, np.int32),
        block,
        np.empty(slots // 2, np.int32),
        np.empty(n, np.int32),
        np.empty(n, np.int64),
        np.empty(n, np.int32),
        is_cut,
    )
    return block, nc, is_cut


def biconnected_components(g: Graph) -> Decomposition:
    """Decompose ``g`` into its biconnected components in linear time.

    Components are ordered by their smallest edge and each component's edges
    are sorted, both lexicographically on ``(i, j)`` index pairs with
    ``i < j``.  Every bridge is a component of its own.
    """
    block, nc, is_cut = _run_kernel(g)
    codes, bounds, verts, vbounds = _canonical_blocks(g.indptr, g.indices, block, nc)
    return Decomposition(g, codes, bounds, verts, vbounds, np.flatnonzero(is_cut).tolist())


def articulation_vertices(g: Graph) -> frozenset:
    """Labels of the vertices whose removal disconnects some pair of other vertices."""
    _, _, is_cut = _run_kernel(g)
    labels = g.labels
    return frozenset(labels[i] for i in np.flatnonzero(is_cut).tolist())


def is_clique(b: BiconnectedComponent) -> bool:
    k = len(b.vertices)
    return len(b.edges) == k * (k - 1) // 2


def cycle_vertices(g: Graph, decomposition: Decomposition | None = None) -> frozenset:
    """Labels of the vertices lying on at least one cycle of ``g``.

    These are exactly the vertices of components with three or more vertices.
    """
    d = biconnected_components(g) if decomposition is None else decomposition
    labels = g.labels
    out: set = set()
    for n in d.size3plus_indices:
        out.update(labels[i] for i in d.components[n].vertices)
    return frozenset(out)
