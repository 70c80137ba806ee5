"""Exact distances, eccentricities, diameters, and restricted distances.

Diameters use symmetry shortcuts by default: a circulant looks the same
from every vertex (rotation i -> i+1 is an automorphism), so one BFS from 0
suffices; the same rotation on a GGPG graph has exactly two vertex orbits,
outer and inner, so two BFS runs suffice.  A paranoid mode recomputes the
diameter from every source and raises if the shortcut ever disagrees.

Restricted distances feed the gap characterization: along the outer ring
only, the distance from 0 to i is min(i, n-i); along chords only it is BFS
on the chord subgraph, with an explicit infinity for unreachable vertices
(chords sharing a divisor with n cannot leave a residue class).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graph_core import CirculantGraph, GgpgGraph

INF = math.inf


@dataclass(frozen=True)
class DistanceVector:
    """Hop counts from one source; INF marks unreachable vertices."""

    source: int
    dist: tuple

    def __getitem__(self, v: int):
        return self.dist[v]

    def eccentricity(self):
        return max(self.dist)


def format_distance(d) -> str:
    """Serialize a hop count; infinity becomes the literal string inf."""
    return "inf" if d == INF else str(int(d))


def _bfs_levels(neighbor_fn, num_vertices: int, src: int) -> list:
    dist = [INF] * num_vertices
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in neighbor_fn(u):
            if dist[w] is INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs(g, src: int) -> DistanceVector:
    """Exact unweighted distances from src in either family."""
    g.check_vertex(src)
    return DistanceVector(src, tuple(_bfs_levels(g.neighbors, g.num_vertices, src)))


def eccentricity(g, src: int):
    return bfs(g, src).eccentricity()


def all_source_diameter(g):
    """Brute force: max eccentricity over every vertex.  The oracle the
    symmetry shortcuts are checked against."""
    return max(eccentricity(g, v) for v in g.vertices())


def diameter_circulant(g: CirculantGraph, paranoid: bool = False) -> int:
    """max distance from vertex 0; rotation makes every source equivalent."""
    if g.family != "circulant":
        raise TypeError(f"single-source shortcut needs a circulant, got {g.label()}")
    d = eccentricity(g, 0)
    if paranoid:
        full = all_source_diameter(g)
        if full != d:
            raise RuntimeError(
                f"symmetry shortcut mismatch on {g.label()}: "
                f"ecc(0) = {d}, all-source diameter = {full}")
    return d


def diameter_ggpg(g: GgpgGraph, paranoid: bool = False) -> int:
    """max(ecc(u_0), ecc(v_0)); rotation has two orbits, outer and inner."""
    if g.family != "ggpg":
        raise TypeError(f"two-source shortcut needs a GGPG graph, got {g.label()}")
    d = max(eccentricity(g, g.outer(0)), eccentricity(g, g.inner(0)))
    if paranoid:
        full = all_source_diameter(g)
        if full != d:
            raise RuntimeError(
                f"symmetry shortcut mismatch on {g.label()}: "
                f"two-source = {d}, all-source diameter = {full}")
    return d


def outer_only_distance(g: CirculantGraph, i: int) -> int:
    """Distance from 0 to i using generator-1 edges only: the shorter arc."""
    g.check_vertex(i)
    return min(i, g.n - i) if i else 0


def inner_only_distances(g: CirculantGraph) -> tuple:
    """Distances from 0 in the chord-only subgraph (generators after the
    first).  INF where no chord walk reaches."""
    chords = g.gens[1:]
    n = g.n

    def chord_neighbors(v):
        out = []
        for s in chords:
            out.append((v + s) % n)
            out.append((v - s) % n)
        return out

    if not chords:
        empty = [INF] * n
        empty[0] = 0
        return tuple(empty)
    return tuple(_bfs_levels(chord_neighbors, n, 0))


def inner_only_distance(g: CirculantGraph, i: int):
    """Chord-only distance from 0 to i, or INF if unreachable."""
    g.check_vertex(i)
    return inner_only_distances(g)[i]


def distance_dump_rows(g, sources=None):
    """Rows for the distance dump CSV: family,n,gens,source,vertex,dist."""
    if sources is None:
        if isinstance(g, CirculantGraph):
            sources = [0]
        else:
            sources = [g.outer(0), g.inner(0)]
    gens = g.gens if isinstance(g, CirculantGraph) else g.chords
    gens_txt = "-".join(str(s) for s in gens)
    for src in sources:
        vec = bfs(g, src)
        for v in g.vertices():
            yield (g.family, g.n, gens_txt, g.vertex_label(src),
                   g.vertex_label(v), format_distance(vec[v]))
