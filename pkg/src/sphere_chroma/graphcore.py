"""Exact graph coloring over small labeled graphs.

Vertices are indices into a label list; edges are unordered index pairs.
Adjacency is kept as dense bit rows (one int per vertex), which keeps the
search loops allocation-free.  The exact engine is a branch-and-bound over
color classes in DSATUR order with the first branched vertex pinned to
color 0; when a node budget runs out it reports an explicit undecided
outcome instead of guessing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "Graph",
    "Coloring",
    "ChiCertificate",
    "ChiUndecided",
    "InfeasibilityEvidence",
    "SchemaError",
    "GRAPH_FORMAT",
    "complete_graph",
    "induced_subgraph",
    "validate_coloring",
    "greedy_dsatur",
    "clique_lower_bound",
    "chromatic_number_exact",
    "export_dimacs_kcolor",
    "export_dot",
    "to_json",
    "from_json",
]

GRAPH_FORMAT = "sphere-chroma-graph-v1"


class SchemaError(ValueError):
    """Raised when graph JSON is malformed or violates the schema."""


class Graph:
    """Immutable undirected graph; the label list fixes the vertex order."""

    __slots__ = ("labels", "edges", "adj")

    def __init__(self, labels, edges=()):
        labels = tuple(labels)
        for x in labels:
            if not isinstance(x, str):
                raise ValueError(f"vertex label {x!r} is not a string")
        n = len(labels)
        es = set()
        for e in edges:
            i, j = e
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ValueError(f"edge {e!r} has non-integer endpoints")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {e!r} out of range for {n} vertices")
            if i == j:
                raise ValueError(f"self-loop ({i}, {j}) is not allowed")
            es.add((i, j) if i < j else (j, i))
        adj = [0] * n
        for i, j in es:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.labels = labels
        self.edges = frozenset(es)
        self.adj = tuple(adj)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self):
        return hash((self.labels, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def complete_graph(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(labels, edges)


def induced_subgraph(g: Graph, keep) -> Graph:
    """Subgraph on the given vertex indices, preserving their relative order."""
    keep = list(keep)
    if len(set(keep)) != len(keep):
        raise ValueError("duplicate vertex in induced_subgraph selection")
    pos = {v: i for i, v in enumerate(keep)}
    labels = [g.labels[v] for v in keep]
    edges = [
        (pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos
    ]
    return Graph(labels, edges)


class Coloring:
    """Assignment of integer color ids to vertex indices.

    Accepts either a mapping {vertex: color} or a sequence indexed by
    vertex.  ``size`` is the number of distinct colors actually used.
    """

    __slots__ = ("assignment",)

    def __init__(self, assignment):
        if isinstance(assignment, Coloring):
            assignment = assignment.assignment
        if not isinstance(assignment, dict):
            assignment = dict(enumerate(assignment))
        for v, c in assignment.items():
            if not (isinstance(v, int) and isinstance(c, int)):
                raise ValueError(f"coloring entry {v!r}: {c!r} is not int: int")
        self.assignment = dict(assignment)

    @property
    def size(self) -> int:
        return len(set(self.assignment.values()))

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.assignment == other.assignment

    def __repr__(self):
        return f"Coloring({self.assignment!r})"


@dataclass(frozen=True)
class InfeasibilityEvidence:
    """Record that a full search ruled out a smaller palette."""

    colors_ruled_out: int
    nodes_explored: int


@dataclass(frozen=True)
class ChiCertificate:
    chi: int
    witness: Coloring
    clique_bound: int
    infeasibility: InfeasibilityEvidence | None = None


@dataclass(frozen=True)
class ChiUndecided:
    """Budget ran out: chi lies in [lower, upper], witness achieves upper."""

    lower: int
    upper: int
    witness: Coloring
    nodes_explored: int


def validate_coloring(g: Graph, coloring: Coloring):
    """Return None if proper, else the lexicographically least violating edge.

    A partial assignment is a domain error naming the first uncolored vertex.
    """
    a = coloring.assignment
    for v in range(g.n):
        if v not in a:
            raise ValueError(
                f"vertex {v} ({g.labels[v]!r}) is uncolored; "
                "validate_coloring needs a total assignment"
            )
    for v in a:
        if not 0 <= v < g.n:
            raise ValueError(f"coloring references vertex {v} outside the graph")
    for i, j in sorted(g.edges):
        if a[i] == a[j]:
            return (i, j)
    return None


def greedy_dsatur(g: Graph) -> Coloring:
    """Greedy coloring in saturation order; ties broken by least vertex index."""
    n = g.n
    color = [-1] * n
    sat = [0] * n  # bitmask of colors seen on neighbors
    for _ in range(n):
        best, best_sat = -1, -1
        for v in range(n):
            if color[v] < 0:
                s = sat[v].bit_count()
                if s > best_sat:
                    best, best_sat = v, s
        c = 0
        while sat[best] >> c & 1:
            c += 1
        color[best] = c
        bit = 1 << c
        for u in g.neighbors(best):
            if color[u] < 0:
                sat[u] |= bit
    return _canonical_coloring(color)


def _canonical_coloring(color: list[int]) -> Coloring:
    # dense ids 0..size-1, in order of first appearance by vertex index
    remap: dict[int, int] = {}
    out = {}
    for v, c in enumerate(color):
        if c not in remap:
            remap[c] = len(remap)
        out[v] = remap[c]
    return Coloring(out)


def clique_lower_bound(g: Graph) -> int:
    """Size of a clique found by a deterministic greedy pass (0 on no vertices)."""
    n = g.n
    if n == 0:
        return 0
    deg = [g.degree(v) for v in range(n)]
    best = 1
    for seed in range(n):
        size = 1
        cand = g.adj[seed]
        while cand:
            pick, key = -1, None
            m = cand
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                k = (deg[u], -u)
                if key is None or k > key:
                    pick, key = u, k
            size += 1
            cand &= g.adj[pick]
        if size > best:
            best = size
    return best


def _k_colorable(adj, nbrs, deg, n, k, node_cap):
    """Backtracking search for a proper k-coloring.

    Returns (status, coloring or None, nodes) with status "sat", "unsat"
    or "budget".  Vertices are picked in saturation order (ties: degree,
    then least index); at each node the usable colors are those already in
    use plus at most one fresh color, so the first vertex always takes
    color 0 and color classes are explored in canonical order.
    """
    if n == 0:
        return "sat", [], 0
    if k <= 0:
        return "unsat", None, 0
    full = (1 << k) - 1
    color = [-1] * n
    sat = [0] * n
    nodes = 0
    max_used = 0

    def select():
        # (vertex, dead). dead means some uncolored vertex has no color left.
        v, bs, bd = -1, -1, -1
        for u in range(n):
            if color[u] < 0:
                s = sat[u]
                if s == full:
                    return u, True
                sc = s.bit_count()
                # ascending scan keeps the least index on full ties
                if sc > bs or (sc == bs and deg[u] > bd):
                    v, bs, bd = u, sc, deg[u]
        return v, False

    v0, _ = select()
    # frame: [vertex, untried candidate mask, max_used before assigning, trail]
    frames = [[v0, (1 << min(max_used + 1, k)) - 1 & ~sat[v0], max_used, None]]
    while frames:
        fr = frames[-1]
        v, trail = fr[0], fr[3]
        if trail is not None:
            bit = 1 << color[v]
            for u in trail:
                sat[u] ^= bit
            color[v] = -1
            max_used = fr[2]
            fr[3] = None
        cand = fr[1]
        if not cand:
            frames.pop()
            continue
        low = cand & -cand
        c = low.bit_length() - 1
        fr[1] = cand ^ low
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            return "budget", None, nodes - 1
        color[v] = c
        bit = 1 << c
        trail = []
        for u in nbrs[v]:
            if color[u] < 0 and not sat[u] & bit:
                sat[u] |= bit
                trail.append(u)
        fr[3] = trail
        if c + 1 > max_used:
            max_used = c + 1
        nxt, dead = select()
        if dead:
            continue
        if nxt < 0:
            return "sat", color[:], nodes
        frames.append([nxt, (1 << min(max_used + 1, k)) - 1 & ~sat[nxt], max_used, None])
    return "unsat", None, nodes


def chromatic_number_exact(g: Graph, budget: int | None = None):
    """Exact chromatic number with certificate, or ChiUndecided on budget.

    Tries k = clique bound, clique bound + 1, ... until a k-coloring is
    found; each completed failed search exhausts the whole (symmetry
    reduced) space for that k, so the result is exact.  ``budget`` caps
    the total number of branch nodes across the call.
    """
    n = g.n
    if n == 0:
        return ChiCertificate(0, Coloring({}), 0, None)
    ub_col = greedy_dsatur(g)
    ub = ub_col.size
    lb = clique_lower_bound(g)
    if lb == ub:
        return ChiCertificate(ub, ub_col, lb, None)
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = [g.degree(v) for v in range(n)]
    spent = 0
    last_refutation = None
    for k in range(lb, ub):
        cap = None if budget is None else budget - spent
        status, col, nodes = _k_colorable(g.adj, nbrs, deg, n, k, cap)
        spent += nodes
        if status == "sat":
            evidence = None
            if k > lb:
                evidence = InfeasibilityEvidence(k - 1, last_refutation)
            return ChiCertificate(k, _canonical_coloring(col), lb, evidence)
        if status == "budget":
            return ChiUndecided(k, ub, ub_col, spent)
        last_refutation = nodes
    return ChiCertificate(ub, ub_col, lb, InfeasibilityEvidence(ub - 1, last_refutation))


def export_dimacs_kcolor(g: Graph, k: int) -> str:
    """DIMACS CNF for "g has a proper k-coloring".

    Variable v*k + c + 1 means "vertex v gets color c".  One at-least-one
    clause per vertex and one conflict clause per edge per color; no
    at-most-one clauses, so satisfying assignments may set several colors
    on a vertex and any one of them can be picked.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    n = g.n
    edges = g.sorted_edges
    lines = [f"p cnf {n * k} {n + len(edges) * k}"]
    for v in range(n):
        lines.append(" ".join(str(v * k + c + 1) for c in range(k)) + " 0")
    for i, j in edges:
        for c in range(k):
            lines.append(f"-{i * k + c + 1} -{j * k + c + 1} 0")
    return "\n".join(lines) + "\n"


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, coloring: Coloring | None = None) -> str:
    """Undirected DOT text; vertices in list order, edges in sorted index order."""
    if coloring is not None:
        bad = validate_coloring(g, coloring)
        if bad is not None:
            raise ValueError(f"coloring is not proper: edge {bad} is monochromatic")
    lines = ["graph G {"]
    for v in range(g.n):
        q = _dot_quote(g.labels[v])
        if coloring is None:
            lines.append(f"{q};")
        else:
            lines.append(f"{q} [color={coloring.assignment[v]}];")
    for i, j in g.sorted_edges:
        lines.append(f"{_dot_quote(g.labels[i])} -- {_dot_quote(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    """Canonical one-line JSON; edges sorted lexicographically."""
    doc = {
        "format": GRAPH_FORMAT,
        "vertex_labels": list(g.labels),
        "edges": [list(e) for e in g.sorted_edges],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Graph:
    """Parse graph JSON, with field and position diagnostics on bad input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(
            f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(doc, dict):
        raise SchemaError("top level is not an object")
    fmt = doc.get("format")
    if fmt != GRAPH_FORMAT:
        raise SchemaError(f"field 'format': expected {GRAPH_FORMAT!r}, got {fmt!r}")
    labels = doc.get("vertex_labels")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise SchemaError("field 'vertex_labels': expected a list of strings")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise SchemaError("field 'edges': expected a list of [i, j] pairs")
    n = len(labels)
    seen = set()
    parsed = []
    for idx, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise SchemaError(f"field 'edges'[{idx}]: expected a pair of ints, got {e!r}")
        i, j = e
        if i == j:
            raise SchemaError(f"field 'edges'[{idx}]: self-loop [{i},{j}]")
        if not i < j:
            raise SchemaError(f"field 'edges'[{idx}]: endpoints must satisfy i < j, got [{i},{j}]")
        if not (0 <= i and j < n):
            raise SchemaError(f"field 'edges'[{idx}]: [{i},{j}] out of range for {n} vertices")
        if (i, j) in seen:
            raise SchemaError(f"field 'edges'[{idx}]: duplicate edge [{i},{j}]")
        seen.add((i, j))
        parsed.append((i, j))
    return Graph(labels, parsed)
