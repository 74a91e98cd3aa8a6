"""Directed multigraphs with a fixed edge order.

Vertices are ``1..n``; edge ids are ``1..m`` in list order, and that order is
the element order used by every activity notion and by the burning list.
Trees and arborescences are frozensets of edge ids.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exact_arith import IntegerMatrix, IntegrityError, determinant


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Digraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 1:
            raise ValueError("a digraph needs at least one vertex")
        for i, (t, h) in enumerate(edges, 1):
            if not (1 <= t <= self.vertex_count and 1 <= h <= self.vertex_count):
                raise ValueError(f"edge {i} = ({t}, {h}) out of vertex range")
            if t == h:
                raise ValueError(f"edge {i} is a self-loop at vertex {t}")

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(1, self.m + 1)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def tail(self, e: int) -> int:
        return self.edges[e - 1][0]

    def head(self, e: int) -> int:
        return self.edges[e - 1][1]

    def ends(self, e: int) -> tuple[int, int]:
        return self.edges[e - 1]


class SignedEdgeSet(NamedTuple):
    positive: frozenset
    negative: frozenset

    @property
    def support(self) -> frozenset:
        return self.positive | self.negative

    def flipped(self) -> "SignedEdgeSet":
        return SignedEdgeSet(self.negative, self.positive)


class ListEntry(NamedTuple):
    edge: int
    in_tree: bool
    toward_root: bool


# -- parsing -----------------------------------------------------------------

def parse_digraph(text: str) -> Digraph:
    """Parse ``digraph <n> <m>`` followed by m lines ``tail head``."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "digraph":
        raise GraphFormatError("expected header 'digraph <n> <m>'", lineno)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError("vertex/edge counts must be integers", lineno) from None
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}",
                               body[-1][0] if body else lineno)
    edges = []
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError("expected 'tail head'", lineno)
        try:
            t, h = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("endpoints must be integers", lineno) from None
        if not (1 <= t <= n and 1 <= h <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
        if t == h:
            raise GraphFormatError("self-loops are not supported", lineno)
        edges.append((t, h))
    return Digraph(n, tuple(edges))


def format_digraph(G: Digraph) -> str:
    return "\n".join([f"digraph {G.n} {G.m}"] + [f"{t} {h}" for t, h in G.edges]) + "\n"


# -- basic predicates ----------------------------------------------------------

def _components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        parent[find(u)] = find(v)
    return [find(x) for x in range(n + 1)]


def is_connected(G: Digraph) -> bool:
    comp = _components(G.n, G.edges)
    return len({comp[v] for v in G.vertices}) == 1


def is_eulerian(G: Digraph) -> bool:
    if not is_connected(G):
        return False
    outdeg = [0] * (G.n + 1)
    indeg = [0] * (G.n + 1)
    for t, h in G.edges:
        outdeg[t] += 1
        indeg[h] += 1
    return outdeg == indeg


def reverse(G: Digraph) -> Digraph:
    return Digraph(G.n, tuple((h, t) for t, h in G.edges))


def incidence_matrix(G: Digraph) -> IntegerMatrix:
    """Column e has +1 at head(e) and -1 at tail(e)."""
    rows = [[0] * G.m for _ in range(G.n)]
    for j, (t, h) in enumerate(G.edges):
        rows[h - 1][j] += 1
        rows[t - 1][j] -= 1
    return IntegerMatrix.from_rows(rows)


def is_spanning_tree(G: Digraph, T: Iterable[int]) -> bool:
    T = frozenset(T)
    if len(T) != G.n - 1 or not T <= set(G.edge_ids):
        return False
    comp = _components(G.n, (G.ends(e) for e in T))
    return len({comp[v] for v in G.vertices}) == 1


def is_arborescence(G: Digraph, root: int, T: Iterable[int]) -> bool:
    """Spanning arborescence rooted at ``root`` (edges directed away)."""
    T = frozenset(T)
    if not is_spanning_tree(G, T):
        return False
    heads = [G.head(e) for e in T]
    return root not in heads and len(set(heads)) == len(heads)


def enumerate_spanning_trees(G: Digraph) -> list[frozenset]:
    if not is_connected(G):
        raise ValueError("graph is not connected")
    return [frozenset(c) for c in itertools.combinations(G.edge_ids, G.n - 1)
            if is_spanning_tree(G, c)]


def enumerate_arborescences(G: Digraph, root: int) -> list[frozenset]:
    return [T for T in enumerate_spanning_trees(G) if is_arborescence(G, root, T)]


# -- tree structure ------------------------------------------------------------

def _tree_adjacency(G: Digraph, T: Iterable[int]) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in G.vertices}
    for e in T:
        t, h = G.ends(e)
        adj[t].append((h, e))
        adj[h].append((t, e))
    return adj


def _shore(G: Digraph, T: frozenset, e: int, start: int) -> set[int]:
    """Vertices reachable from ``start`` in T - e."""
    adj = _tree_adjacency(G, T - {e})
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _check_tree(G: Digraph, T) -> frozenset:
    T = frozenset(T)
    if not is_spanning_tree(G, T):
        raise ValueError(f"{sorted(T)} is not a spanning tree")
    return T


def fundamental_cut(G: Digraph, T, e: int) -> SignedEdgeSet:
    """Edges between the two components of T - e; e and its parallels positive."""
    T = _check_tree(G, T)
    if e not in T:
        raise ValueError(f"edge {e} is not in the tree")
    side = _shore(G, T, e, G.tail(e))
    pos, neg = set(), set()
    for f in G.edge_ids:
        t, h = G.ends(f)
        if (t in side) != (h in side):
            (pos if t in side else neg).add(f)
    return SignedEdgeSet(frozenset(pos), frozenset(neg))


def tree_path(G: Digraph, T, start: int, end: int) -> list[tuple[int, bool]]:
    """Edges of the T-path start -> end, each with a 'traversed forward' flag."""
    adj = _tree_adjacency(G, T)
    prev: dict[int, tuple[int, int]] = {start: (0, 0)}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w, f in adj[v]:
            if w not in prev:
                prev[w] = (v, f)
                todo.append(w)
    path = []
    v = end
    while v != start:
        u, f = prev[v]
        path.append((f, G.tail(f) == u))
        v = u
    path.reverse()
    return path


def fundamental_cycle(G: Digraph, T, e: int) -> SignedEdgeSet:
    """The cycle of T + e, traversed in e's direction; forward edges positive."""
    T = _check_tree(G, T)
    if e in T:
        raise ValueError(f"edge {e} is in the tree")
    pos, neg = {e}, set()
    for f, forward in tree_path(G, T, G.head(e), G.tail(e)):
        (pos if forward else neg).add(f)
    return SignedEdgeSet(frozenset(pos), frozenset(neg))


def burning_edge_list(G: Digraph, root: int, T) -> list[ListEntry]:
    """Labeled edge list of a spanning tree.

    Starting with only the root burning, repeatedly list the largest unburnt
    edge touching a burning vertex (orientation ignored).  A tree edge also
    sets its far endpoint burning.
    """
    T = _check_tree(G, T)
    burning = {root}
    unburnt = set(G.edge_ids)
    out = []
    while unburnt:
        candidates = [f for f in unburnt if G.tail(f) in burning or G.head(f) in burning]
        if not candidates:
            raise ValueError("graph is not connected")
        f = max(candidates)
        unburnt.discard(f)
        if f in T:
            t, h = G.ends(f)
            toward = h in burning
            if toward and t in burning:
                raise IntegrityError("tree edge with both ends burning")
            burning.add(t if toward else h)
            out.append(ListEntry(f, True, toward))
        else:
            out.append(ListEntry(f, False, False))
    return out


def compare_trees(G: Digraph, root: int, T1, T2) -> int:
    """-1, 0 or 1 as T1 precedes, equals or follows T2 in the tree order.

    At the first difference of the labeled edge lists the edge e lies in
    exactly one tree; T1 precedes T2 when e is in T1 pointing away from the
    root, or e is in T2 pointing toward the root.
    """
    T1, T2 = frozenset(T1), frozenset(T2)
    if T1 == T2:
        _check_tree(G, T1)
        return 0
    L1 = burning_edge_list(G, root, T1)
    L2 = burning_edge_list(G, root, T2)
    for x, y in zip(L1, L2):
        if x == y:
            continue
        if x.edge != y.edge or x.in_tree == y.in_tree:
            raise IntegrityError(f"unexpected first difference {x} vs {y}")
        if x.in_tree:
            return 1 if x.toward_root else -1
        return -1 if y.toward_root else 1
    raise IntegrityError("distinct trees with identical labeled edge lists")


def edge_directions(G: Digraph, root: int, T) -> dict[int, bool]:
    """For each tree edge: True if it points toward the root within T."""
    return {x.edge: x.toward_root for x in burning_edge_list(G, root, T) if x.in_tree}


def external_semiactive(G: Digraph, root: int, F, e: int, order=None) -> bool:
    """Largest edge of the fundamental cycle C(F, e) is oriented like e.

    ``order`` optionally lists the edges from smallest to largest.
    """
    F = frozenset(F)
    if not is_arborescence(G, root, F):
        raise ValueError(f"{sorted(F)} is not an arborescence rooted at {root}")
    C = fundamental_cycle(G, F, e)
    key = None if order is None else {x: i for i, x in enumerate(order)}.__getitem__
    top = max(C.support, key=key)
    return top in C.positive


def laplacian_in(G: Digraph) -> list[list[int]]:
    """In-degree Laplacian: L[v][v] = indeg(v), L[u][v] -= #(u -> v)."""
    L = [[0] * G.n for _ in range(G.n)]
    for t, h in G.edges:
        L[h - 1][h - 1] += 1
        L[t - 1][h - 1] -= 1
    return L


def count_arborescences_det(G: Digraph, root: int) -> int:
    """Directed matrix-tree theorem for out-arborescences rooted at ``root``."""
    L = laplacian_in(G)
    keep = [i for i in range(G.n) if i != root - 1]
    return determinant([[L[i][j] for j in keep] for i in keep])


def count_spanning_trees_det(G: Digraph) -> int:
    L = [[0] * G.n for _ in range(G.n)]
    for t, h in G.edges:
        for a, b in ((t, h), (h, t)):
            L[a - 1][a - 1] += 1
            L[a - 1][b - 1] -= 1
    return determinant([row[1:] for row in L[1:]])
