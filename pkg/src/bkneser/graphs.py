"""Simple undirected graphs over integer vertex indices.

Adjacency is a per-vertex bitset (a Python int), which keeps adjacency tests
and neighborhood intersections O(1)-ish at the few-thousand-vertex scale this
package targets.  Graphs are treated as immutable after construction; every
query is pure.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedError, DomainError


class Graph:
    """Simple undirected graph: vertex count, adjacency bitsets, optional labels."""

    __slots__ = ("vertex_count", "adjacency", "labels")

    def __init__(
        self,
        vertex_count: int,
        adjacency: Sequence[int],
        labels: Optional[Sequence[str]] = None,
    ):
        if vertex_count <= 0:
            raise DomainError(f"vertex count must be positive, got {vertex_count}")
        if len(adjacency) != vertex_count:
            raise DomainError("adjacency length does not match vertex count")
        self.vertex_count = vertex_count
        self.adjacency = tuple(adjacency)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != vertex_count:
            raise DomainError("labels length does not match vertex count")
        full = (1 << vertex_count) - 1
        for v, mask in enumerate(self.adjacency):
            if mask < 0 or mask & ~full:
                raise DomainError(f"adjacency of vertex {v} refers outside the vertex set")
            if mask >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adjacency[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        adjacency = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise DomainError(f"edge ({u}, {v}) outside vertex range")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(vertex_count, adjacency, labels)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.vertex_count):
            rest = self.adjacency[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return out

    def arcs(self) -> list[tuple[int, int]]:
        """All ordered adjacent pairs."""
        out = []
        for u, v in self.edges():
            out.append((u, v))
            out.append((v, u))
        return out

    def bfs_distances(self, start: int) -> list[int | float]:
        """Distances from ``start``; math.inf marks unreachable vertices."""
        if not 0 <= start < self.vertex_count:
            raise IndexError(f"vertex {start} outside range 0..{self.vertex_count - 1}")
        dist: list[int | float] = [math.inf] * self.vertex_count
        dist[start] = 0
        seen = 1 << start
        frontier = 1 << start
        d = 0
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= self.adjacency[v]
            frontier = reach & ~seen
            seen |= frontier
            d += 1
            for v in _bits(frontier):
                dist[v] = d
        return dist

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= self.adjacency[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.vertex_count) - 1

    def diameter(self) -> int:
        """Largest BFS distance over all pairs; requires connectivity."""
        best = 0
        for v in range(self.vertex_count):
            dist = self.bfs_distances(v)
            worst = max(dist)
            if worst == math.inf:
                raise DisconnectedError("diameter of a disconnected graph")
            best = max(best, int(worst))
        return best

    def bipartition(self) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Two-coloring as (class of vertex 0, other class), or None on an odd cycle."""
        color = [-1] * self.vertex_count
        for root in range(self.vertex_count):
            if color[root] != -1:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                nxt = []
                for v in queue:
                    for u in _bits(self.adjacency[v]):
                        if color[u] == -1:
                            color[u] = color[v] ^ 1
                            nxt.append(u)
                        elif color[u] == color[v]:
                            return None
                queue = nxt
        side0 = tuple(v for v in range(self.vertex_count) if color[v] == 0)
        side1 = tuple(v for v in range(self.vertex_count) if color[v] == 1)
        return side0, side1

    def complement_graph(self) -> "Graph":
        full = (1 << self.vertex_count) - 1
        adjacency = [full ^ mask ^ (1 << v) for v, mask in enumerate(self.adjacency)]
        return Graph(self.vertex_count, adjacency, self.labels)

    def to_json_dict(self) -> dict:
        data: dict = {
            "vertex_count": self.vertex_count,
            "edges": [[u, v] for u, v in self.edges()],
        }
        if self.labels is not None:
            data["labels"] = list(self.labels)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in range(self.vertex_count):
            if self.labels is not None:
                lines.append(f'  {v} [label="{self.labels[v]}"];')
            else:
                lines.append(f"  {v};")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def _bits(mask: int):
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
