#!/usr/bin/env python3
"""
WALK REDUCTION IN C_17(1,2,5,8)

Any walk in a multi-loop network is fully described by how often it takes
each generator in each direction.  Netting those counts gives a signed
vector (alpha, lambda_2, ..., lambda_m) -- the path representation -- and
realizing the vector (ring steps first, then each chord block) recovers a
concrete vertex sequence with the same endpoint.

This script replays a ten-step walk, reduces it to a length-4 rep, then
asks for the canonical *shortest* rep of the same endpoint and checks it
against BFS.
"""

from loopnet import (
    Walk, bfs, build_circulant, endpoint, realize, reduce_walk,
    render_rep, shortest_rep,
)

g = build_circulant(17, [1, 2, 5, 8])
print(f"graph: {g.label()}   vertices={g.num_vertices} edges={g.num_edges}")

steps = [(5, +1), (8, +1), (2, -1), (5, -1), (2, +1),
         (8, -1), (2, +1), (5, +1), (5, +1), (1, -1)]
walk = Walk(0, steps)
visits = walk.replay(g)
print(f"\nten-step walk from 0: {' -> '.join(map(str, visits))}")

rep = reduce_walk(walk, g)
print(f"reduced rep: {render_rep(rep, g)}   (alpha={rep.alpha}, "
      f"lambdas={rep.lambdas})")
print(f"rep length {rep.length} vs walk length {len(steps)}: "
      f"{len(steps) - rep.length} steps cancelled")
print(f"endpoint check: {endpoint(rep, g)} == {visits[-1]}")

r = realize(rep, g)
print(f"realized: {' -> '.join(map(str, r.vertices))}   "
      f"vertex-distinct path: {r.is_path}")

best = shortest_rep(g, visits[-1])
print(f"\ncanonical shortest rep to {visits[-1]}: {render_rep(best, g)} "
      f"(length {best.length})")
print(f"BFS distance d(0,{visits[-1]}) = {bfs(g, 0)[visits[-1]]}"
      f"   -- the rep calculus needs no graph search to find it")
