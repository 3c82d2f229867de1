"""Zero-divisor graphs and their classical invariants.

A :class:`ZDGraph` is a simple undirected graph with per-vertex adjacency
bitsets and a full BFS distance matrix (-1 marks unreachable pairs). Graphs
come from three sources: zero-divisor graphs of rings, generated named
families, and parsed edge-list files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .rings import FiniteRing, zero_divisors

INF = math.inf


class EmptyGraphError(Exception):
    """The ring is an integral domain: L(R) is empty, no graph exists."""


@dataclass(frozen=True)
class ZDGraph:
    """Immutable simple graph over indexed vertices.

    ``external_ids`` keeps the source identity of each vertex (the ring
    element index for ring-derived graphs); exports use it so that, say,
    the zero-divisor graph of Zn:6 prints its vertices as 2, 3, 4.
    """

    order: int
    labels: tuple[str, ...]
    external_ids: tuple[int, ...]
    adj: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...]
    source: str = ""

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            mask = self.adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in _bits(mask))
        return out

    @property
    def size(self) -> int:
        return sum(self.degree(v) for v in range(self.order)) // 2

    @property
    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return all(d >= 0 for d in self.dist[0])


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _all_pairs_bfs(order: int, adj: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for s in range(order):
        dist = [-1] * order
        dist[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            for v in _bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return tuple(rows)


def graph_from_edges(
    order: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
    external_ids: Sequence[int] | None = None,
    source: str = "",
) -> ZDGraph:
    adj = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u},{v}) out of range for order {order}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} not allowed in a simple graph")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is None:
        labels = [str(i) for i in range(order)]
    if external_ids is None:
        external_ids = list(range(order))
    return ZDGraph(
        order=order,
        labels=tuple(labels),
        external_ids=tuple(external_ids),
        adj=tuple(adj),
        dist=_all_pairs_bfs(order, adj),
        source=source,
    )


def build_zdgraph(ring: FiniteRing) -> ZDGraph:
    """Zero-divisor graph: vertices L(R), edge x-y iff x != y and x*y = 0.

    A nilpotent x with x*x = 0 contributes no self-loop; the graph is simple.
    """
    members = zero_divisors(ring).members
    if not members:
        raise EmptyGraphError(
            f"{ring.name} is an integral domain; its zero-divisor graph is empty"
        )
    sub = ring.mul[np.ix_(members, members)] == 0
    np.fill_diagonal(sub, False)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(sub)))]
    return graph_from_edges(
        order=len(members),
        edges=edges,
        labels=[ring.labels[x] for x in members],
        external_ids=members,
        source=ring.name,
    )


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphInvariants:
    order: int
    size: int
    diameter: float          # int-valued, or INF when disconnected
    girth: float             # int-valued, or INF when acyclic
    clique_number: int
    max_degree: int
    cut_vertices: tuple[int, ...]
    degree_one_vertices: tuple[int, ...]


def graph_invariants(g: ZDGraph) -> GraphInvariants:
    n = g.order
    degrees = [g.degree(v) for v in range(n)]
    if n == 0:
        return GraphInvariants(0, 0, 0, INF, 0, 0, (), ())
    finite = [d for row in g.dist for d in row if d >= 0]
    disconnected = any(d < 0 for row in g.dist for d in row)
    diameter = INF if disconnected else float(max(finite))
    return GraphInvariants(
        order=n,
        size=g.size,
        diameter=diameter if diameter == INF else int(diameter),
        girth=_girth(g),
        clique_number=_clique_number(g),
        max_degree=max(degrees),
        cut_vertices=_cut_vertices(g),
        degree_one_vertices=tuple(v for v in range(n) if degrees[v] == 1),
    )


def _girth(g: ZDGraph) -> float:
    """Shortest cycle length via a BFS scan from every vertex."""
    best = INF
    n = g.order
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if dist[u] + dist[u] + 1 >= best:
                continue
            for v in _bits(g.adj[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def _clique_number(g: ZDGraph) -> int:
    """Exact maximum clique size, branch and bound with a coloring bound."""
    n = g.order
    if n == 0:
        return 0
    adj = g.adj
    best = 1

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        order_out: list[int] = []
        bounds: list[int] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                avail &= ~adj[v]
                rest &= ~(1 << v)
                order_out.append(v)
                bounds.append(color)
        return order_out, bounds

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        order_out, bounds = color_sort(cand)
        for i in range(len(order_out) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order_out[i]
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _cut_vertices(g: ZDGraph) -> tuple[int, ...]:
    """Articulation points by iterative DFS lowlink."""
    n = g.order
    visited = [False] * n
    disc = [0] * n
    low = [0] * n
    cut = set()
    timer = 0
    for root in range(n):
        if visited[root]:
            continue
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(_bits(g.adj[root])))]
        visited[root] = True
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if not visited[v]:
                    visited[v] = True
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(_bits(g.adj[v]))))
                    advanced = True
                    break
                elif v != parent:
                    low[u] = min(low[u], disc[v])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return tuple(sorted(cut))


# ---------------------------------------------------------------------------
# exports and ingestion
# ---------------------------------------------------------------------------


def export_graph(g: ZDGraph, fmt: str) -> str:
    if fmt == "dot":
        return _export_dot(g)
    if fmt == "edgelist":
        return _export_edgelist(g)
    if fmt == "json":
        return _export_json(g)
    raise ValueError(f"unknown graph format {fmt!r} (expected dot, edgelist, or json)")


def _export_dot(g: ZDGraph) -> str:
    lines = ["graph zdgraph {"]
    for v in range(g.order):
        lines.append(f'  v{g.external_ids[v]} [label="{g.labels[v]}"];')
    for u, v in sorted((min(a, b), max(a, b)) for a, b in _ext_edges(g)):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ext_edges(g: ZDGraph) -> list[tuple[int, int]]:
    return [(g.external_ids[u], g.external_ids[v]) for u, v in g.edges()]


def _export_edgelist(g: ZDGraph) -> str:
    lines = []
    if g.source:
        lines.append(f"# graph {g.source}")
    for v in range(g.order):
        lines.append(f"# vertex {g.external_ids[v]} {g.labels[v]}")
    lines.extend(
        f"{u} {v}" for u, v in sorted((min(a, b), max(a, b)) for a, b in _ext_edges(g))
    )
    return "\n".join(lines) + "\n"


def _export_json(g: ZDGraph) -> str:
    inv = graph_invariants(g)
    doc = {
        "order": g.order,
        "edges": sorted(g.edges()),
        "labels": list(g.labels),
        "external_ids": list(g.external_ids),
        "source": g.source,
        "invariants": {
            "order": inv.order,
            "size": inv.size,
            "diameter": None if inv.diameter == INF else int(inv.diameter),
            "girth": None if inv.girth == INF else int(inv.girth),
            "clique_number": inv.clique_number,
            "max_degree": inv.max_degree,
            "cut_vertices": list(inv.cut_vertices),
            "degree_one_vertices": list(inv.degree_one_vertices),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_edgelist(text: str) -> ZDGraph:
    """Parse the module's own edge-list format back into a graph."""
    declared: dict[int, str] = {}
    raw_edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(maxsplit=2)
            if len(parts) >= 2 and parts[0] == "vertex" and parts[1].lstrip("-").isdigit():
                declared[int(parts[1])] = parts[2] if len(parts) > 2 else parts[1]
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"line {lineno}: expected 'u v' with integer ids, got {line!r}")
        raw_edges.append((int(parts[0]), int(parts[1])))
    ids = sorted(set(declared) | {u for e in raw_edges for u in e})
    index = {ext: i for i, ext in enumerate(ids)}
    return graph_from_edges(
        order=len(ids),
        edges=[(index[u], index[v]) for u, v in raw_edges],
        labels=[declared.get(ext, str(ext)) for ext in ids],
        external_ids=ids,
        source="edgelist",
    )
