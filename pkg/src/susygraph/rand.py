"""Seeded random graph generation for experiments and acceptance sweeps.

All generators take an explicit random.Random so identical seeds always
reproduce identical graphs, independent of global state.
"""

from __future__ import annotations

import random

from .graph import ORIENTED, DirectedGraph, symmetrize


def random_graph(
    rng: random.Random,
    num_vertices: int,
    edge_probability: float,
    mode: str = ORIENTED,
) -> DirectedGraph:
    """Independent coin flip per ordered vertex pair.

    In symmetric mode the flip is per unordered pair and both directions
    are added, so the result is its own reverse.
    """
    edges: list[tuple[int, int]] = []
    if mode == ORIENTED:
        for a in range(num_vertices):
            for b in range(num_vertices):
                if a != b and rng.random() < edge_probability:
                    edges.append((a, b))
        return DirectedGraph(num_vertices, tuple(edges), ORIENTED)
    for a in range(num_vertices):
        for b in range(a + 1, num_vertices):
            if rng.random() < edge_probability:
                edges.append((a, b))
    return symmetrize(DirectedGraph(num_vertices, tuple(edges), ORIENTED))


def random_tree(rng: random.Random, num_vertices: int) -> DirectedGraph:
    """A uniform-attachment directed tree on n vertices: n - 1 edges, connected.

    Vertex v > 0 attaches to a uniformly chosen earlier vertex, with a coin
    flip deciding the edge direction.
    """
    edges: list[tuple[int, int]] = []
    for v in range(1, num_vertices):
        u = rng.randrange(v)
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return DirectedGraph(num_vertices, tuple(edges), ORIENTED)


def random_connected_graph(
    rng: random.Random,
    num_vertices: int,
    extra_edge_probability: float = 0.15,
    mode: str = ORIENTED,
) -> DirectedGraph:
    """A random tree plus extra random chords; connected by construction."""
    tree = random_tree(rng, num_vertices)
    present = set(tree.edges)
    edges = list(tree.edges)
    for a in range(num_vertices):
        for b in range(num_vertices):
            if a == b or (a, b) in present:
                continue
            if rng.random() < extra_edge_probability:
                edges.append((a, b))
                present.add((a, b))
    g = DirectedGraph(num_vertices, tuple(edges), ORIENTED)
    return symmetrize(g) if mode != ORIENTED else g


def random_reorientation(rng: random.Random, graph: DirectedGraph) -> list[int]:
    """Edge indices safe to flip together: never touching a reciprocal pair.

    Flipping half of a pair would collide with its partner, so paired
    edges are excluded; each remaining edge is flipped with probability
    one half.
    """
    paired = {k for pair in graph.reciprocal_pairs for k in pair}
    flips = []
    present = set(graph.edges)
    for k, (tail, head) in enumerate(graph.edges):
        if k in paired or (head, tail) in present:
            continue
        if rng.random() < 0.5:
            flips.append(k)
    return flips
