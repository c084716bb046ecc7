"""The bipartite graph on maximal edge intervals and cycles in it.

Nodes ``0 .. nv-1`` are the maximal vertical edge intervals, nodes
``nv .. nv+nh-1`` the maximal horizontal ones, both in the deterministic
order produced by :mod:`polyideal.grid`.  A vertical and a horizontal node are
adjacent when the two intervals cross in a vertex of the collection.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .algebra import Binomial, Monomial
from .errors import NotACycleError, NotLiftableError
from .grid import HORIZONTAL, VERTICAL, CellCollection, EdgeInterval, Point


@dataclass(frozen=True)
class BipartiteIntervalGraph:
    v_nodes: tuple[EdgeInterval, ...]
    h_nodes: tuple[EdgeInterval, ...]
    # (v_index, h_index) -> crossing vertex
    edges: dict = field(hash=False, compare=True)

    @property
    def nv(self) -> int:
        return len(self.v_nodes)

    @property
    def num_nodes(self) -> int:
        return len(self.v_nodes) + len(self.h_nodes)

    def node_label(self, n: int) -> str:
        return f"v{n}" if n < self.nv else f"h{n - self.nv}"

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.num_nodes)]
        for i, j in self.edges:
            adj[i].add(self.nv + j)
            adj[self.nv + j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.num_nodes))
        g.add_edges_from((i, self.nv + j) for i, j in self.edges)
        return g


@dataclass(frozen=True)
class GraphCycle:
    """Alternating cycle ``v[0], h[0], v[1], h[1], ..., v[r-1], h[r-1]``.

    ``v[k]`` is adjacent to ``h[k]`` and ``h[k]`` to ``v[k+1]`` (indices mod r).
    Indices are interval indices, not node ids.
    """

    v: tuple[int, ...]
    h: tuple[int, ...]

    def __len__(self) -> int:
        return 2 * len(self.v)

    def nodes(self, nv: int) -> tuple[int, ...]:
        out = []
        for a, b in zip(self.v, self.h):
            out.extend((a, nv + b))
        return tuple(out)

    def canonical(self) -> "GraphCycle":
        """Rotate to start at the smallest vertical index, then pick the
        direction whose first horizontal index is smaller."""
        r = len(self.v)
        k = self.v.index(min(self.v))
        fwd = GraphCycle(
            tuple(self.v[(k + t) % r] for t in range(r)),
            tuple(self.h[(k + t) % r] for t in range(r)),
        )
        # reversed traversal: v[k], h[k-1], v[k-1], h[k-2], ...
        bwd = GraphCycle(
            tuple(self.v[(k - t) % r] for t in range(r)),
            tuple(self.h[(k - t - 1) % r] for t in range(r)),
        )
        return min(fwd, bwd, key=lambda c: c.h)

    @classmethod
    def from_nodes(cls, nodes, nv: int) -> "GraphCycle":
        """Build from a closed node sequence that alternates sides."""
        nodes = list(nodes)
        k = next(t for t, n in enumerate(nodes) if n < nv)
        nodes = nodes[k:] + nodes[:k]
        return cls(tuple(nodes[0::2]), tuple(n - nv for n in nodes[1::2])).canonical()


@dataclass(frozen=True)
class LatticeCycle:
    """Closed vertex sequence ``a_1, ..., a_m`` with ``a_1 == a_m``."""

    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.points[:-1]


def build_graph(P: CellCollection) -> BipartiteIntervalGraph:
    """The bipartite graph ``G(P)`` with crossing vertices as edge witnesses."""
    edges = {ij: p for p, ij in sorted(P.interval_index.items())}
    return BipartiteIntervalGraph(P.vertical_intervals, P.horizontal_intervals, edges)


def iter_chordless_cycles(G: BipartiteIntervalGraph, min_len: int = 4) -> Iterator[GraphCycle]:
    """Yield each induced cycle of length >= ``min_len`` exactly once.

    A cycle is grown from its smallest node ``s`` along induced paths through
    nodes larger than ``s``.  The second node must be smaller than the closing
    node, so each cycle is reported in one direction only.
    """
    if min_len < 4 or min_len % 2:
        raise ValueError("min_len must be an even integer >= 4")
    adj = G.adjacency()
    n = G.num_nodes
    for s in range(n):
        for p1 in sorted(adj[s]):
            if p1 < s:
                continue
            # blocked[u]: number of non-tip path nodes adjacent to u
            blocked = [0] * n
            for u in adj[s]:
                blocked[u] += 1
            yield from _grow(adj, G.nv, s, [s, p1], blocked, min_len)


def _grow(adj, nv, s, path, blocked, min_len):
    tip = path[-1]
    on_path = set(path)
    for u in sorted(adj[tip]):
        if u <= s or u in on_path:
            continue
        if u in adj[s]:
            # closing node; any other contact with the path is a chord
            if blocked[u] == 1 and len(path) >= 3 and path[1] < u and len(path) + 1 >= min_len:
                yield GraphCycle.from_nodes(path + [u], nv)
            continue
        if blocked[u]:
            continue
        for w in adj[tip]:
            blocked[w] += 1
        path.append(u)
        yield from _grow(adj, nv, s, path, blocked, min_len)
        path.pop()
        for w in adj[tip]:
            blocked[w] -= 1


def enumerate_chordless_cycles(G: BipartiteIntervalGraph, min_len: int = 4) -> list[GraphCycle]:
    """All induced cycles of length >= ``min_len``, canonical and sorted."""
    return sorted(set(iter_chordless_cycles(G, min_len)), key=lambda c: (len(c), c.v, c.h))


def is_weakly_chordal(G: BipartiteIntervalGraph) -> bool:
    """Every cycle longer than 4 has a chord (no induced cycle of length >= 6)."""
    return next(iter_chordless_cycles(G, 6), None) is None


def chordless_witness(G: BipartiteIntervalGraph) -> GraphCycle | None:
    return next(iter_chordless_cycles(G, 6), None)


def iter_cycles(G: BipartiteIntervalGraph, max_len: int) -> Iterator[GraphCycle]:
    """All simple cycles (chords allowed) of length <= ``max_len``, each once."""
    adj = G.adjacency()
    n = G.num_nodes

    def grow(path, on_path):
        tip = path[-1]
        for u in sorted(adj[tip]):
            if u < path[0]:
                continue
            if u == path[0]:
                if len(path) >= 4 and path[1] < path[-1]:
                    yield GraphCycle.from_nodes(path, G.nv)
                continue
            if u in on_path or len(path) >= max_len:
                continue
            on_path.add(u)
            path.append(u)
            yield from grow(path, on_path)
            path.pop()
            on_path.discard(u)

    for s in range(n):
        yield from grow([s], {s})


def cycle_to_primitive_cycle(G: BipartiteIntervalGraph, c: GraphCycle) -> LatticeCycle:
    """Lift a graph cycle to the closed vertex sequence
    V1^H1, V2^H1, V2^H2, ..., Vr^Hr, V1^Hr, V1^H1 (``^`` = crossing point)."""
    r = len(c.v)
    pts = []
    for k in range(r):
        for vi in (c.v[k], c.v[(k + 1) % r]):
            p = G.edges.get((vi, c.h[k]))
            if p is None:
                raise NotLiftableError()
            pts.append(p)
    # pts = [V1^H1, V2^H1, V2^H2, V3^H2, ..., Vr^Hr, V1^Hr]
    return LatticeCycle(tuple(pts) + (pts[0],))


def primitive_cycle_to_graph_cycle(P: CellCollection, c: LatticeCycle) -> GraphCycle:
    """Read the maximal intervals back off a lifted cycle."""
    index = P.interval_index
    pts = c.vertices
    if len(pts) % 2:
        raise NotACycleError()
    horizontal_first = pts[0][1] == pts[1][1]
    if not horizontal_first:
        # rotate by one so the first segment is horizontal
        pts = pts[1:] + pts[:1]
    vs = tuple(index[pts[2 * k]][0] for k in range(len(pts) // 2))
    hs = tuple(index[pts[2 * k]][1] for k in range(len(pts) // 2))
    return GraphCycle(vs, hs).canonical()


def is_lattice_cycle(P: CellCollection, c: LatticeCycle) -> bool:
    """The four defining conditions of a cycle in ``P``."""
    pts = c.points
    m = len(pts)
    if m < 5 or pts[0] != pts[-1]:
        return False
    body = pts[:-1]
    if len(set(body)) != len(body):
        return False
    verts = P.vertex_set
    if any(p not in verts for p in body):
        return False
    kinds = []
    for a, b in zip(pts, pts[1:]):
        kind = _segment_kind(P, a, b)
        if kind is None:
            return False
        kinds.append(kind)
    # alternation, including the wrap from the last segment to the first
    return all(kinds[i] != kinds[(i + 1) % len(kinds)] for i in range(len(kinds)))


def _segment_kind(P: CellCollection, a: Point, b: Point) -> str | None:
    """``H``/``V`` if ``[a, b]`` is an edge interval of ``P``, else ``None``."""
    if a == b:
        return None
    index = P.interval_index
    if a not in index or b not in index:
        return None
    if a[1] == b[1]:
        return HORIZONTAL if index[a][1] == index[b][1] else None
    if a[0] == b[0]:
        return VERTICAL if index[a][0] == index[b][0] else None
    return None


def is_primitive_cycle(P: CellCollection, c: LatticeCycle) -> bool:
    """Every maximal edge interval holds at most two vertices of the cycle."""
    counts: dict[tuple[str, int], int] = {}
    index = P.interval_index
    for p in c.vertices:
        vi, hj = index[p]
        for key in ((VERTICAL, vi), (HORIZONTAL, hj)):
            counts[key] = counts.get(key, 0) + 1
            if counts[key] > 2:
                return False
    return True


def cycle_binomial(c: LatticeCycle) -> Binomial:
    """Odd-position vertices minus even-position vertices."""
    pts = c.points
    m = len(pts)
    if m % 2 == 0:
        raise NotACycleError()
    odd = Monomial.from_vars(pts[0:m - 1:2])
    even = Monomial.from_vars(pts[1:m - 1:2])
    return Binomial(odd, even)


def has_self_crossing(P: CellCollection, c: LatticeCycle) -> bool:
    """A vertical and a horizontal segment with four distinct endpoints whose
    maximal intervals cross."""
    index = P.interval_index
    pts = c.points
    vertical, horizontal = [], []
    for a, b in zip(pts, pts[1:]):
        kind = _segment_kind(P, a, b)
        if kind == VERTICAL:
            vertical.append((a, b, P.vertical_intervals[index[a][0]]))
        elif kind == HORIZONTAL:
            horizontal.append((a, b, P.horizontal_intervals[index[a][1]]))
    for a, b, vk in vertical:
        for c1, d1, hl in horizontal:
            if len({a, b, c1, d1}) == 4 and vk.crossing(hl) is not None:
                return True
    return False


def dump_graph(G: BipartiteIntervalGraph) -> str:
    """Text dump: ``V i line lo hi``, ``H j line lo hi``, ``E i j wx wy``."""
    lines = [f"V {i} {iv.line} {iv.lo} {iv.hi}" for i, iv in enumerate(G.v_nodes)]
    lines += [f"H {j} {iv.line} {iv.lo} {iv.hi}" for j, iv in enumerate(G.h_nodes)]
    lines += [f"E {i} {j} {p.x} {p.y}" for (i, j), p in sorted(G.edges.items())]
    return "\n".join(lines) + "\n"
