"""Profile and edge-list text formats, and report rendering.

Profile documents hold one voter per line::

    # comment
    alternatives: a b c d      (optional header, first non-comment line)
    v1: a b c
    v2: b c

Tokens are whitespace separated; ``#`` starts a comment anywhere on a line.
Edge-list documents hold one ``a b`` pair per line with the same comments.
"""

from __future__ import annotations

import json
import re

from .condition import ConditionReport, DictatorAssignment
from .errors import DuplicateLabel, ParseError
from .graph import Decomposition, Graph, graph_from_edge_list, is_clique
from .profile import STRICT, Profile

HEADER = "alternatives"
_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def parse_profile(text: str, mode: str = STRICT) -> Profile:
    alternatives: list[str] = []
    known: set[str] = set()
    voters: list[str] = []
    evals: list[frozenset[str]] = []
    seen_voter_line = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        colon = line.find(":")
        if colon < 0:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError(lineno, col, "expected 'label: alternative ...'")
        label = line[:colon].strip()
        if not label:
            raise ParseError(lineno, colon + 1, "missing label before ':'")
        if _TOKEN.fullmatch(label) is None:
            col = line.find(label) + 1
            raise ParseError(lineno, col, f"label {label!r} contains whitespace")
        tokens = [(m.group(), colon + 2 + m.start()) for m in _TOKEN.finditer(line[colon + 1:])]
        for tok, col in tokens:
            if ":" in tok:
                raise ParseError(lineno, col, f"unexpected ':' in {tok!r}")

        if label == HEADER:
            if seen_voter_line or alternatives:
                raise ParseError(lineno, 1, "'alternatives:' header must come before any voter line")
            for tok, col in tokens:
                if tok in known:
                    raise DuplicateLabel(lineno, col, f"alternative {tok!r} declared twice")
                known.add(tok)
                alternatives.append(tok)
            if not tokens:
                raise ParseError(lineno, colon + 1, "empty 'alternatives:' header")
            continue

        seen_voter_line = True
        if label in voters:
            raise DuplicateLabel(lineno, line.find(label) + 1, f"voter {label!r} appears twice")
        ev: set[str] = set()
        for tok, col in tokens:
            if tok in ev:
                raise DuplicateLabel(lineno, col, f"alternative {tok!r} repeated for voter {label!r}")
            ev.add(tok)
            if tok not in known:
                known.add(tok)
                alternatives.append(tok)
        voters.append(label)
        evals.append(frozenset(ev))

    p = Profile(tuple(alternatives), tuple(voters), tuple(evals))
    return p.validate(mode)


def serialize_profile(p: Profile) -> str:
    """Render ``p`` so that :func:`parse_profile` gives back an equal profile."""
    lines = [f"{HEADER}: " + " ".join(p.alternatives)]
    for v, ev in zip(p.voters, p.evals):
        lines.append(f"{v}: " + " ".join(p.sorted_alternatives(ev)))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks:
            continue
        if len(toks) != 2:
            col = toks[2][1] if len(toks) > 2 else toks[0][1]
            raise ParseError(lineno, col, f"expected two endpoints, found {len(toks)}")
        (a, _), (b, col) = toks
        if a == b:
            raise ParseError(lineno, col, f"self-loop on {a!r}")
        pairs.append((a, b))
    return graph_from_edge_list(pairs)


def _fmt_set(labels) -> str:
    return "{" + ", ".join(labels) + "}"


def _order(g: Graph, labels) -> list:
    idx = g.index
    return sorted(labels, key=idx.__getitem__)


def _component_rows(d: Decomposition, witnesses: dict[int, str] | None):
    g = d.graph
    labels = g.labels
    for n, comp in enumerate(d.components):
        row = {
            "index": n,
            "vertices": [labels[i] for i in sorted(comp.vertices)],
            "edges": [[labels[u], labels[w]] for u, w in comp.edges],
            "size_class": "2" if comp.size == 2 else "3+",
            "clique": is_clique(comp),
        }
        if witnesses is not None:
            row["witness"] = witnesses.get(n)
        yield row


def report_dict(r: ConditionReport, d: DictatorAssignment | None = None, p: Profile | None = None) -> dict:
    out = {
        "holds": r.holds,
        "components": list(_component_rows(r.decomposition, r.witnesses)),
        "failures": [
            {
                "index": f.index,
                "vertices": _order(r.decomposition.graph, f.vertices),
                "witness": None,
            }
            for f in r.failures
        ],
    }
    if d is not None:
        g = r.decomposition.graph
        alt_order = p.sorted_alternatives if p is not None else (lambda s: _order(g, s))
        out["dictators"] = {
            "components": [{"index": n, "voter": v} for n, v in sorted(d.dictators.items())],
            "edges": [{"edge": [a, b], "voter": v} for (a, b), v in sorted(
                d.edge_dictators.items(), key=lambda kv: (g.index[kv[0][0]], g.index[kv[0][1]])
            )],
        }
        out["maximal_cycles"] = [alt_order(s) for s in d.maximal_cycle_vertex_sets]
        out["a0"] = alt_order(d.a0) if p is not None else sorted(d.a0)
    return out


def emit_report(
    r: ConditionReport,
    d: DictatorAssignment | None = None,
    fmt: str = "text",
    profile: Profile | None = None,
) -> str:
    """Render a condition report (and optional dictator assignment).

    ``profile`` orders ``a0`` by the profile's alternative order, which also
    covers alternatives absent from the union graph.
    """
    data = report_dict(r, d, profile)
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    dec = r.decomposition
    lines = [
        f"condition: {'holds' if r.holds else 'fails'}",
        f"components: {len(dec)} (size 2: {len(dec.size2_indices)}, size 3+: {len(dec.size3plus_indices)})",
    ]
    for row in data["components"]:
        tag = "clique" if row["clique"] else "not a clique"
        who = row["witness"] if row["witness"] is not None else "none"
        lines.append(f"  B{row['index']} {_fmt_set(row['vertices'])} [{tag}] witness: {who}")
    if data["failures"]:
        lines.append("uncovered components:")
        for f in data["failures"]:
            lines.append(f"  B{f['index']} {_fmt_set(f['vertices'])}: no voter evaluates all of these")
    if d is not None:
        lines.append(f"maximal cycles: {len(data['maximal_cycles'])}")
        for k, s in enumerate(data["maximal_cycles"], start=1):
            lines.append(f"  C{k} {_fmt_set(s)}")
        lines.append(f"off-cycle alternatives: {_fmt_set(data['a0'])}")
        lines.append("local dictators:")
        for item in data["dictators"]["components"]:
            lines.append(f"  B{item['index']}: {item['voter']}")
        for item in data["dictators"]["edges"]:
            a, b = item["edge"]
            lines.append(f"  edge {a}-{b}: {item['voter']}")
    return "\n".join(lines) + "\n"


def decomposition_dict(d: Decomposition) -> dict:
    g = d.graph
    return {
        "vertices": len(g),
        "edges": g.edge_count,
        "components": list(_component_rows(d, None)),
        "articulation_vertices": _order(g, d.articulation_labels()),
        "size2_indices": list(d.size2_indices),
        "size3plus_indices": list(d.size3plus_indices),
    }


def emit_decomposition(d: Decomposition, fmt: str = "text") -> str:
    data = decomposition_dict(d)
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False, default=str) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"graph: {data['vertices']} vertices, {data['edges']} edges",
        f"components: {len(d)} (size 2: {len(d.size2_indices)}, size 3+: {len(d.size3plus_indices)})",
    ]
    for row in data["components"]:
        tag = "clique" if row["clique"] else "not a clique"
        lines.append(f"  B{row['index']} {_fmt_set(map(str, row['vertices']))} [{tag}]")
    lines.append(f"articulation vertices: {_fmt_set(map(str, data['articulation_vertices']))}")
    return "\n".join(lines) + "\n"
