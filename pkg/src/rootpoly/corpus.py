"""Eulerian digraph corpora: named examples, an exhaustive small family, and
seeded random superpositions of directed cycles."""

from __future__ import annotations

import itertools
import random

from .digraph import Digraph, is_eulerian

# A 6-vertex Eulerian digraph with a marked arborescence; vertex 1 is the root.
SIX_VERTEX = Digraph(6, ((1, 2), (3, 1), (1, 4), (5, 1), (3, 4), (4, 5), (6, 3), (4, 6), (2, 3)))
SIX_VERTEX_ARBORESCENCE = frozenset({1, 3, 6, 7, 8})


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def two_vertex(k: int) -> Digraph:
    """2k edges alternating 1->2, 2->1."""
    return Digraph(2, tuple((1, 2) if i % 2 == 0 else (2, 1) for i in range(2 * k)))


def named_graphs() -> dict[str, Digraph]:
    out = {"sixvertex": SIX_VERTEX}
    for n in range(2, 6):
        out[f"cycle{n}"] = directed_cycle(n)
    for k in range(1, 4):
        out[f"twovertex{2 * k}"] = two_vertex(k)
    return out


def _canonical(n: int, edges) -> tuple:
    return min(tuple(sorted((p[t - 1], p[h - 1]) for t, h in edges))
               for p in itertools.permutations(range(1, n + 1)))


def exhaustive_family(n_max: int = 4, m_max: int = 6, up_to_isomorphism: bool = False) -> list[Digraph]:
    """All labeled Eulerian digraphs with 2 <= n <= n_max and m <= m_max.

    Edges are listed in sorted order (one edge order per edge multiset).
    """
    out = []
    for n in range(2, n_max + 1):
        arcs = [(t, h) for t in range(1, n + 1) for h in range(1, n + 1) if t != h]
        seen = set()
        for m in range(n, m_max + 1):
            for edges in itertools.combinations_with_replacement(arcs, m):
                G = Digraph(n, edges)
                if not is_eulerian(G):
                    continue
                if up_to_isomorphism:
                    key = _canonical(n, edges)
                    if key in seen:
                        continue
                    seen.add(key)
                    G = Digraph(n, key)
                out.append(G)
    return out


def random_eulerian(rng: random.Random, n_max: int, m_max: int) -> Digraph:
    """Superpose random directed cycles, each touching the vertices used so far."""
    while True:
        n = rng.randint(2, n_max)
        edges: list[tuple[int, int]] = []
        used: set[int] = set()
        for _ in range(4 * m_max):
            length = rng.randint(2, n)
            if len(edges) + length > m_max:
                continue
            cyc = rng.sample(range(1, n + 1), length)
            if used and not used & set(cyc):
                continue
            edges.extend(zip(cyc, cyc[1:] + cyc[:1]))
            used.update(cyc)
        if len(used) < 2:
            continue
        relabel = {v: i for i, v in enumerate(sorted(used), 1)}
        edges = [(relabel[t], relabel[h]) for t, h in edges]
        rng.shuffle(edges)
        G = Digraph(len(used), tuple(edges))
        if is_eulerian(G):
            return G


def random_family(count: int, n_max: int = 5, m_max: int = 9, seed: int = 0) -> list[Digraph]:
    rng = random.Random(seed)
    return [random_eulerian(rng, n_max, m_max) for _ in range(count)]


def generate_corpus(n_max: int = 5, m_max: int = 9, count: int = 50, seed: int = 0,
                    exhaustive: tuple[int, int] = (4, 6)) -> dict[str, Digraph]:
    """Named graphs, the exhaustive family, then ``count`` random graphs."""
    out = named_graphs()
    for i, G in enumerate(exhaustive_family(*exhaustive)):
        out[f"small{i:03d}"] = G
    for i, G in enumerate(random_family(count, n_max, m_max, seed)):
        out[f"rand{i:03d}"] = G
    return out
