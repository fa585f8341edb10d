"""
BK-tree over naturals under the arithmetic distance.

The distance is integer valued, so every node keeps its children in buckets
keyed by their exact distance to it.  Range and nearest-neighbour searches
skip a bucket ``e`` whenever the triangle inequality rules out the whole
subtree, i.e. ``|d(x, node) - e|`` exceeds the search radius.

Each stored value carries its factorization so queries never re-factor it.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Iterator

from .errors import EmptyIndexError, InvalidArgumentError
from .factor_core import Factorization, as_natural, factor
from .metric import factor_distance


class _Node:
    __slots__ = ("value", "fac", "children")

    def __init__(self, value: int, fac: Factorization):
        self.value = value
        self.fac = fac
        self.children: dict[int, _Node] = {}


class BkIndex:
    """Insert-only BK-tree.  The first inserted value is the root.

    Queries are read-only and safe to run concurrently; ``insert`` needs
    exclusive access.
    """

    def __init__(self, values: Iterable[int] = ()):
        self._root: _Node | None = None
        self._size = 0
        for v in values:
            self.insert(v)

    def __len__(self) -> int:
        return self._size

    def __contains__(self, v: int) -> bool:
        try:
            v = as_natural(v, "v")
        except InvalidArgumentError:
            return False
        return bool(self.range(v, 0))

    def __iter__(self) -> Iterator[int]:
        stack = [self._root] if self._root else []
        while stack:
            node = stack.pop()
            yield node.value
            stack.extend(node.children.values())

    @property
    def root(self) -> int | None:
        return self._root.value if self._root else None

    def edge_label(self, parent: int, child: int) -> int | None:
        """Bucket key under which ``child`` hangs directly below ``parent``."""
        for node in self._nodes():
            if node.value == parent:
                for e, c in node.children.items():
                    if c.value == child:
                        return e
        return None

    def _nodes(self) -> Iterator[_Node]:
        stack = [self._root] if self._root else []
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children.values())

    def insert(self, v: int) -> "BkIndex":
        """Add ``v``; inserting a value already present does nothing."""
        v = as_natural(v, "v")
        fv = factor(v)
        if self._root is None:
            self._root = _Node(v, fv)
            self._size = 1
            return self
        node = self._root
        while True:
            d = factor_distance(node.fac, fv)
            if d == 0:
                return self
            child = node.children.get(d)
            if child is None:
                node.children[d] = _Node(v, fv)
                self._size += 1
                return self
            node = child

    def range(self, x: int, r: int, *, return_visited: bool = False):
        """Stored values within distance ``r`` of ``x``, ascending.

        With ``return_visited=True`` returns ``(values, nodes_visited)``.
        """
        x = as_natural(x, "x")
        if isinstance(r, bool) or not isinstance(r, int) or r < 0:
            raise InvalidArgumentError(f"radius must be an integer >= 0, got {r!r}")
        fx = factor(x)
        found = []
        visited = 0
        stack = [self._root] if self._root else []
        while stack:
            node = stack.pop()
            visited += 1
            d = factor_distance(node.fac, fx)
            if d <= r:
                found.append(node.value)
            lo, hi = d - r, d + r
            for e, child in node.children.items():
                if lo <= e <= hi:
                    stack.append(child)
        found.sort()
        return (found, visited) if return_visited else found

    def nearest(self, x: int, k: int = 1, *, return_visited: bool = False):
        """The ``k`` stored values closest to ``x`` as ``(value, distance)``
        pairs, ordered by distance and then by value."""
        x = as_natural(x, "x")
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise InvalidArgumentError(f"k must be an integer >= 1, got {k!r}")
        if self._root is None:
            raise EmptyIndexError("nearest-neighbour query on an empty index")
        fx = factor(x)
        # Max-heap of the current best k, keyed on (distance, value).
        best: list[tuple[int, int]] = []
        # Min-heap frontier keyed on a lower bound of the subtree's distances.
        frontier = [(0, 0, self._root)]
        tiebreak = 1
        visited = 0
        while frontier:
            bound, _, node = heapq.heappop(frontier)
            if len(best) == k and bound > -best[0][0]:
                break
            visited += 1
            d = factor_distance(node.fac, fx)
            item = (-d, -node.value)
            if len(best) < k:
                heapq.heappush(best, item)
            elif item > best[0]:
                heapq.heapreplace(best, item)
            for e, child in node.children.items():
                lower = abs(d - e)
                if len(best) < k or lower <= -best[0][0]:
                    heapq.heappush(frontier, (lower, tiebreak, child))
                    tiebreak += 1
        out = [(v, d) for d, v in sorted((-nd, -nv) for nd, nv in best)]
        return (out, visited) if return_visited else out


def bk_insert(idx: BkIndex, v: int) -> BkIndex:
    return idx.insert(v)


def bk_range(idx: BkIndex, x: int, r: int) -> list[int]:
    return idx.range(x, r)


def bk_nearest(idx: BkIndex, x: int, k: int) -> list[tuple[int, int]]:
    return idx.nearest(x, k)


def load_corpus(path) -> list[int]:
    """Read newline-delimited decimal naturals; blank lines are ignored."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            if not text.lstrip("+-").isdigit():
                raise InvalidArgumentError(f"corpus line {lineno}: {text!r} is not an integer")
            values.append(as_natural(int(text), f"corpus line {lineno}"))
    return values
