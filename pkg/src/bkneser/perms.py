"""Permutations of [n], induced vertex maps, and small permutation groups.

Groups are handled the blunt way: breadth-first closure under composition,
with a configurable order cap.  Every group this package cares about has
order at most a few times 7!, where exhaustive enumeration is both fast and
independently trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError, NeedEnumerationError, OrderCapExceeded
from .graphs import Graph
from .kneser import KneserGraph

DEFAULT_ORDER_CAP = 100_000


def format_cycles(images: Sequence[int], offset: int = 0) -> str:
    """Cycle notation over points offset..offset+len-1, fixed points omitted."""
    n = len(images)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = images[start] - offset
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = images[x] - offset
        if len(cycle) > 1:
            parts.append("(" + " ".join(str(c + offset) for c in cycle) + ")")
    return "".join(parts) if parts else "()"


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n] = {1..n}; images[i-1] = theta(i)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise DomainError(f"not a permutation of [{n}]: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycle(cls, n: int, cycle: Sequence[int]) -> "Permutation":
        """The permutation that is the given cycle, fixing everything else."""
        images = list(range(1, n + 1))
        for i, x in enumerate(cycle):
            images[x - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __str__(self) -> str:
        return format_cycles(self.images, offset=1)


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection of the vertex index set of a fixed graph."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise DomainError(f"not a permutation of 0..{n - 1}")

    @classmethod
    def identity(cls, degree: int) -> "VertexPermutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __str__(self) -> str:
        return format_cycles(self.images)


def is_graph_automorphism(graph: Graph, images: Sequence[int]) -> bool:
    """True iff the vertex map preserves adjacency in both directions."""
    if len(images) != graph.vertex_count:
        return False
    for u, v in graph.edges():
        if not graph.has_edge(images[u], images[v]):
            return False
    return True


def induced_automorphism(kg: KneserGraph, theta: Permutation) -> VertexPermutation:
    """The vertex map f_theta sending each subset {x1..xt} to {theta(x1)..theta(xt)}.

    Adjacency preservation is verified eagerly; a failure would mean a
    construction bug, not a property of theta.
    """
    if theta.n != kg.n:
        raise DomainError(f"permutation of [{theta.n}] cannot act on H({kg.n},{kg.k})")
    images = []
    for index in range(kg.vertex_count):
        s = kg.subset_of_vertex(index)
        mapped = type(s).from_elements(kg.n, (theta(x) for x in s.elements()))
        images.append(kg.vertex_of_subset(mapped))
    perm = VertexPermutation(tuple(images))
    if not is_graph_automorphism(kg.graph, perm.images):
        raise DomainError(f"induced map of {theta} is not an automorphism")
    return perm


def complement_automorphism(kg: KneserGraph) -> VertexPermutation:
    """The complementation involution: the index shift i <-> i + C(n, k)."""
    side = kg.side_size
    images = tuple((i + side) % (2 * side) for i in range(2 * side))
    perm = VertexPermutation(images)
    if kg.n != 2 * kg.k and not is_graph_automorphism(kg.graph, perm.images):
        raise DomainError("complementation failed the adjacency check")
    return perm


def compose(p: VertexPermutation, q: VertexPermutation) -> VertexPermutation:
    """(p after q): v -> p(q(v))."""
    if p.degree != q.degree:
        raise DomainError("cannot compose permutations of different degrees")
    qi = q.images
    pi = p.images
    return VertexPermutation(tuple(pi[x] for x in qi))


def inverse(p: VertexPermutation) -> VertexPermutation:
    images = [0] * p.degree
    for v, w in enumerate(p.images):
        images[w] = v
    return VertexPermutation(tuple(images))


def element_order(p: VertexPermutation) -> int:
    ident = tuple(range(p.degree))
    power = p.images
    order = 1
    while power != ident:
        power = tuple(p.images[x] for x in power)
        order += 1
    return order


def commutes(p: VertexPermutation, q: VertexPermutation) -> bool:
    return compose(p, q) == compose(q, p)


@dataclass(frozen=True)
class PermutationGroup:
    """Generators plus (optionally) the full element set of a vertex group."""

    generators: tuple[VertexPermutation, ...]
    degree: int
    elements: Optional[tuple[VertexPermutation, ...]] = None

    @property
    def order(self) -> int:
        if self.elements is None:
            raise NeedEnumerationError("group has not been enumerated; use group_closure")
        return len(self.elements)

    @property
    def is_enumerated(self) -> bool:
        return self.elements is not None


def closure_images(
    generator_images: Sequence[tuple[int, ...]],
    degree: int,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> set[tuple[int, ...]]:
    """BFS closure of image tuples under composition; raises past order_cap."""
    ident = tuple(range(degree))
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generator_images:
                q = tuple(g[x] for x in p)
                if q not in elements:
                    if len(elements) >= order_cap:
                        raise OrderCapExceeded(
                            f"group closure exceeded the cap of {order_cap} elements"
                        )
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    return elements


def group_closure(
    generators: Iterable[VertexPermutation],
    order_cap: int = DEFAULT_ORDER_CAP,
    degree: Optional[int] = None,
) -> PermutationGroup:
    """Fully enumerate the group generated by the given vertex permutations."""
    gens = tuple(generators)
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise DomainError("generators act on different vertex sets")
    elif degree is None:
        raise DomainError("empty generator list needs an explicit degree")
    elements = closure_images([g.images for g in gens], degree, order_cap)
    wrapped = tuple(VertexPermutation(imgs) for imgs in sorted(elements))
    return PermutationGroup(generators=gens, degree=degree, elements=wrapped)


def orbit(group: PermutationGroup, point: int) -> tuple[int, ...]:
    """Orbit of a vertex under the generated group, by BFS over generators."""
    seen = {point}
    queue = [point]
    gens = [g.images for g in group.generators]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(sorted(seen))


def orbits_on_vertices(group: PermutationGroup) -> list[tuple[int, ...]]:
    remaining = set(range(group.degree))
    out = []
    while remaining:
        rep = min(remaining)
        orb = orbit(group, rep)
        out.append(orb)
        remaining.difference_update(orb)
    return out


def orbits_on_ordered_pairs(
    group: PermutationGroup,
    pairs: Optional[Iterable[tuple[int, int]]] = None,
) -> list[tuple[tuple[int, int], ...]]:
    """Orbit partition of ordered pairs under the diagonal action g.(u,v) = (gu, gv).

    ``pairs`` defaults to all ordered pairs including the diagonal; pass the
    arc list to get arc orbits.
    """
    if pairs is None:
        n = group.degree
        pool = [(u, v) for u in range(n) for v in range(n)]
    else:
        pool = list(pairs)
    gens = [g.images for g in group.generators]
    remaining = set(pool)
    out = []
    while remaining:
        rep = min(remaining)
        seen = {rep}
        queue = [rep]
        while queue:
            (u, v) = queue.pop()
            for g in gens:
                pair = (g[u], g[v])
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        out.append(tuple(sorted(seen)))
        remaining.difference_update(seen)
    return out


def orbits_on_unordered_pairs(
    group: PermutationGroup,
    pairs: Iterable[tuple[int, int]],
) -> list[tuple[tuple[int, int], ...]]:
    """Orbit partition of unordered pairs, stored as (min, max)."""
    gens = [g.images for g in group.generators]
    remaining = {(min(u, v), max(u, v)) for u, v in pairs}
    out = []
    while remaining:
        rep = min(remaining)
        seen = {rep}
        queue = [rep]
        while queue:
            (u, v) = queue.pop()
            for g in gens:
                a, b = g[u], g[v]
                pair = (a, b) if a < b else (b, a)
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        out.append(tuple(sorted(seen)))
        remaining.difference_update(seen)
    return out


def stabilizer(group: PermutationGroup, point: int) -> PermutationGroup:
    """The subgroup of elements fixing ``point``; needs full enumeration."""
    if not group.is_enumerated:
        raise NeedEnumerationError("stabilizer needs a fully enumerated group")
    fixed = tuple(g for g in group.elements if g.images[point] == point)
    return PermutationGroup(generators=fixed, degree=group.degree, elements=fixed)


def is_regular_action(group: PermutationGroup, vertex_count: int) -> bool:
    """Transitive with |group| = number of points (trivial point stabilizers)."""
    if not group.is_enumerated:
        raise NeedEnumerationError("regularity check needs a fully enumerated group")
    if group.order != vertex_count:
        return False
    return len(orbit(group, 0)) == vertex_count


def sym_generators(kg: KneserGraph) -> tuple[VertexPermutation, VertexPermutation]:
    """f over the canonical Sym([n]) generators (1 2) and (1 2 ... n)."""
    n = kg.n
    swap = Permutation.transposition(n, 1, 2)
    cycle = Permutation.from_cycle(n, tuple(range(1, n + 1)))
    return induced_automorphism(kg, swap), induced_automorphism(kg, cycle)


def known_generators(kg: KneserGraph) -> tuple[VertexPermutation, ...]:
    """The standard generator set: f_(1 2), f_(1 2 ... n), and complementation."""
    f_swap, f_cycle = sym_generators(kg)
    return (f_swap, f_cycle, complement_automorphism(kg))
