"""Bipartite Kneser graphs H(n, k) with a canonical vertex indexing.

Vertices 0 .. C(n,k)-1 are the k-subsets in lexicographic order; vertex
C(n,k)+r is the (n-k)-subset whose complement has lex rank r.  This pairing
makes complementation the fixed index shift i <-> i + C(n,k), which the
symmetry modules rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CardinalityError, DomainError, FamilyInvariantError, NullGraphError
from .graphs import Graph
from .subsets import Subset, binomial, rank_subset, unrank_subset


@dataclass(frozen=True)
class KneserGraph:
    n: int
    k: int
    graph: Graph
    side_size: int  # C(n, k); vertices i and i + side_size hold complementary subsets
    _labels: tuple[Subset, ...] = field(repr=False)

    def subset_of_vertex(self, index: int) -> Subset:
        return self._labels[index]

    def vertex_of_subset(self, s: Subset) -> int:
        """Index of the vertex labeled by s (k-side preferred when n = 2k)."""
        if s.n != self.n:
            raise DomainError(f"subset over [{s.n}] does not belong to H({self.n},{self.k})")
        size = s.cardinality
        if size == self.k:
            return rank_subset(s, self.k)
        if size == self.n - self.k:
            return self.side_size + rank_subset(s.complement(), self.k)
        raise CardinalityError(
            f"subset of size {size} is not a vertex of H({self.n},{self.k})"
        )

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


def build_bipartite_kneser(n: int, k: int, allow_null: bool = False) -> KneserGraph:
    """Construct H(n, k); rejects n = 2k unless allow_null, and n < 2k always."""
    if k < 1 or n <= k:
        raise DomainError(f"H(n, k) needs n > k >= 1, got ({n}, {k})")
    if n < 2 * k:
        raise DomainError(f"H({n},{k}) is H({n},{n - k}) in disguise; require n >= 2k")
    if n == 2 * k and not allow_null:
        raise NullGraphError(f"H({n},{k}) has no edges; pass allow_null to build it anyway")

    side = binomial(n, k)
    labels = [unrank_subset(r, n, k) for r in range(side)]
    labels += [labels[r].complement() for r in range(side)]

    adjacency = [0] * (2 * side)
    if n > 2 * k:
        # Neighbors of a k-subset A are the (n-k)-supersets A ∪ T, T from [n]∖A.
        ground = range(1, n + 1)
        for i in range(side):
            a = labels[i]
            outside = [x for x in ground if x not in a]
            for extra in combinations(outside, n - 2 * k):
                b = Subset.from_elements(n, a.elements() + extra)
                j = side + rank_subset(b.complement(), k)
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i

    graph = Graph(2 * side, adjacency, labels=[str(s) for s in labels])
    return KneserGraph(n=n, k=k, graph=graph, side_size=side, _labels=tuple(labels))


@dataclass(frozen=True)
class FamilyReport:
    n: int
    k: int
    vertices: int
    edges: int
    degree: int
    part_sizes: tuple[int, int]
    connected: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "vertices": self.vertices,
            "edges": self.edges,
            "degree": self.degree,
            "part_sizes": list(self.part_sizes),
            "connected": self.connected,
        }


def verify_family_counts(kg: KneserGraph) -> FamilyReport:
    """Check every counting fact about H(n, k): sizes, regularity, parts, connectivity."""
    n, k = kg.n, kg.k
    side = binomial(n, k)
    degree = binomial(n - k, k)
    g = kg.graph

    if g.vertex_count != 2 * side:
        raise FamilyInvariantError(
            f"H({n},{k}): expected {2 * side} vertices, found {g.vertex_count}"
        )
    degrees = set(g.degree_sequence())
    if degrees != {degree}:
        raise FamilyInvariantError(
            f"H({n},{k}): expected all degrees {degree}, found {sorted(degrees)}"
        )
    # Every edge has exactly one endpoint on the k-side.
    expected_edges = side * degree
    if g.edge_count != expected_edges:
        raise FamilyInvariantError(
            f"H({n},{k}): expected {expected_edges} edges, found {g.edge_count}"
        )
    parts = g.bipartition()
    if parts is None:
        raise FamilyInvariantError(f"H({n},{k}): not bipartite")
    sizes = (len(parts[0]), len(parts[1]))
    if sorted(sizes) != [side, side]:
        raise FamilyInvariantError(
            f"H({n},{k}): expected part sizes ({side}, {side}), found {sizes}"
        )
    connected = g.is_connected()
    if not connected:
        raise FamilyInvariantError(f"H({n},{k}): not connected")

    return FamilyReport(
        n=n,
        k=k,
        vertices=g.vertex_count,
        edges=g.edge_count,
        degree=degree,
        part_sizes=sizes,
        connected=connected,
    )
