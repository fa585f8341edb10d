"""
Hasse diagram of divisibility on I_n = {1, ..., n}.

Vertices ``a < b`` are joined when ``b = a * p`` for a prime ``p`` (the
covering relation).  Joining every divisor pair instead would put 11 and 12
two steps apart through 1, whereas shortest paths in the covering graph
reproduce the arithmetic distance exactly.  ``graph_distance`` is therefore an
independent, purely combinatorial oracle for ``metric.dist``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidArgumentError, OutOfRangeError
from .factor_core import big_omega, primes_up_to

DEFAULT_HASSE_CAP = 10**6


@dataclass(frozen=True, eq=False)
class HasseGraph:
    """Covering graph on ``1..n``; ``adjacency[v]`` is the sorted neighbour list of ``v``.

    ``adjacency[0]`` is an unused empty placeholder so vertices index directly.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Each edge once as ``(a, b)`` with ``a < b``, sorted."""
        return [(a, b) for a in range(1, self.n + 1) for b in self.adjacency[a] if a < b]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise InvalidArgumentError(f"vertex {v!r} not in [1, {self.n}]")


def build_hasse(n: int, cap: int = DEFAULT_HASSE_CAP) -> HasseGraph:
    """Covering graph on ``I_n`` built by forward sieving over primes."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"n must be an integer >= 1, got {n!r}")
    if n > cap:
        raise OutOfRangeError(f"n = {n} exceeds Hasse graph cap {cap}")
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    if n >= 2:
        for p in primes_up_to(n):
            for a in range(1, n // p + 1):
                b = a * p
                adj[a].append(b)
                adj[b].append(a)
    return HasseGraph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def bfs_distances(g: HasseGraph, source: int) -> list[int]:
    """Hop counts from ``source`` to every vertex (index 0 unused, -1)."""
    g._check_vertex(source)
    seen = [-1] * (g.n + 1)
    seen[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        dv = seen[v] + 1
        for w in adj[v]:
            if seen[w] < 0:
                seen[w] = dv
                queue.append(w)
    return seen


def graph_distance(g: HasseGraph, a: int, b: int) -> int:
    """Length of a shortest path between ``a`` and ``b`` in ``g``."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        return 0
    seen = {a: 0}
    queue = deque([a])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                if w == b:
                    return seen[v] + 1
                seen[w] = seen[v] + 1
                queue.append(w)
    raise AssertionError("Hasse graph is connected; unreachable vertex")


def export_dot(g: HasseGraph) -> str:
    """Undirected DOT text with one ``rank=same`` group per Omega level.

    Edges are emitted once, ``a -- b`` with ``a < b``, in sorted order.
    """
    levels: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        levels.setdefault(big_omega(v), []).append(v)
    lines = [f"graph hasse_{g.n} {{"]
    for k in sorted(levels):
        lines.append("  { rank=same; " + " ".join(f"{v};" for v in levels[k]) + " }")
    lines.extend(f"  {a} -- {b};" for a, b in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
