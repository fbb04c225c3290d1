"""Transitivity hierarchy, direct-product structure, and the open-question
explorations.

Every test here takes the acting group as an argument instead of recomputing
it, so the same check can run against both the induced-map generators and the
search engine's output; disagreement between the two is a test failure, not a
silent choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .autgroup import DEFAULT_SIZE_LIMIT, automorphism_group
from .errors import (
    DisconnectedError,
    DomainError,
    OrderCapExceeded,
    SizeLimitError,
    StructureError,
)
from .graphs import Graph
from .kneser import KneserGraph, build_bipartite_kneser
from .perms import (
    DEFAULT_ORDER_CAP,
    PermutationGroup,
    VertexPermutation,
    closure_images,
    complement_automorphism,
    group_closure,
    orbits_on_ordered_pairs,
    orbits_on_unordered_pairs,
    orbits_on_vertices,
    sym_generators,
)


def is_vertex_transitive(graph: Graph, group: PermutationGroup) -> bool:
    return len(orbits_on_vertices(group)) == 1


def is_edge_transitive(graph: Graph, group: PermutationGroup) -> bool:
    edges = graph.edges()
    if not edges:
        return True
    return len(orbits_on_unordered_pairs(group, edges)) == 1


def is_arc_transitive(graph: Graph, group: PermutationGroup) -> bool:
    arcs = graph.arcs()
    if not arcs:
        return True
    return len(orbits_on_ordered_pairs(group, arcs)) == 1


def _distance_matrix(graph: Graph) -> list[list[int | float]]:
    return [graph.bfs_distances(v) for v in range(graph.vertex_count)]


def is_distance_transitive(graph: Graph, group: PermutationGroup) -> bool:
    """One pair-orbit per distance value; requires a connected graph.

    Every pair-orbit has constant distance under any group of automorphisms;
    that is asserted unconditionally, so a violation reveals a non-automorphism
    in the group rather than returning a wrong answer.
    """
    if not graph.is_connected():
        raise DisconnectedError("distance-transitivity needs a connected graph")
    dist = _distance_matrix(graph)
    pair_orbits = orbits_on_ordered_pairs(group)
    for orb in pair_orbits:
        values = {dist[u][v] for u, v in orb}
        if len(values) != 1:
            raise StructureError(
                "a pair orbit mixes distances; the group contains a non-automorphism"
            )
    distinct = {dist[u][v] for u in range(graph.vertex_count)
                for v in range(graph.vertex_count)}
    return len(pair_orbits) == len(distinct)


@dataclass(frozen=True)
class TransitivityReport:
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    distance_transitive: bool
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int
    pair_orbits: int
    distance_values: int

    def as_dict(self) -> dict:
        return {
            "vertex": self.vertex_transitive,
            "edge": self.edge_transitive,
            "arc": self.arc_transitive,
            "distance": self.distance_transitive,
            "orbits": {
                "vertices": self.vertex_orbits,
                "edges": self.edge_orbits,
                "arcs": self.arc_orbits,
                "ordered_pairs": self.pair_orbits,
            },
            "distance_values": self.distance_values,
        }


def transitivity_report(graph: Graph, group: PermutationGroup) -> TransitivityReport:
    """All four levels at once, with the hierarchy asserted before returning."""
    vertex_orbs = orbits_on_vertices(group)
    edges = graph.edges()
    arcs = graph.arcs()
    edge_orbs = orbits_on_unordered_pairs(group, edges) if edges else []
    arc_orbs = orbits_on_ordered_pairs(group, arcs) if arcs else []
    if not graph.is_connected():
        raise DisconnectedError("transitivity report needs a connected graph")
    dist = _distance_matrix(graph)
    pair_orbs = orbits_on_ordered_pairs(group)
    for orb in pair_orbs:
        if len({dist[u][v] for u, v in orb}) != 1:
            raise StructureError(
                "a pair orbit mixes distances; the group contains a non-automorphism"
            )
    distinct = {dist[u][v] for u in range(graph.vertex_count)
                for v in range(graph.vertex_count)}

    report = TransitivityReport(
        vertex_transitive=len(vertex_orbs) == 1,
        edge_transitive=len(edge_orbs) <= 1,
        arc_transitive=len(arc_orbs) <= 1,
        distance_transitive=len(pair_orbs) == len(distinct),
        vertex_orbits=len(vertex_orbs),
        edge_orbits=len(edge_orbs),
        arc_orbits=len(arc_orbs),
        pair_orbits=len(pair_orbs),
        distance_values=len(distinct),
    )
    if edges:
        if report.distance_transitive and not report.arc_transitive:
            raise StructureError("hierarchy violated: distance-transitive but not arc")
        if report.arc_transitive and not report.vertex_transitive:
            raise StructureError("hierarchy violated: arc-transitive but not vertex")
        if report.arc_transitive and not report.edge_transitive:
            raise StructureError("hierarchy violated: arc-transitive but not edge")
    return report


@dataclass(frozen=True)
class DirectProductReport:
    n: int
    k: int
    sym_closure_order: int
    alpha_outside_sym: bool
    alpha_commutes: bool
    product_order: int
    aut_order: int

    @property
    def conclusion(self) -> str:
        return f"Aut(H({self.n},{self.k})) = Sym([{self.n}]) x Z_2"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "sym_closure_order": self.sym_closure_order,
            "alpha_outside_sym": self.alpha_outside_sym,
            "alpha_commutes": self.alpha_commutes,
            "product_order": self.product_order,
            "aut_order": self.aut_order,
            "conclusion": self.conclusion,
        }


def verify_direct_product(
    kg: KneserGraph,
    aut_order: int,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> DirectProductReport:
    """Check the four steps behind Aut = Sym([n]) x Z_2 on a concrete graph.

    (a) the induced Sym generators close to a group of order n!;
    (b) complementation lies outside that group;
    (c) complementation commutes with both generators, hence with all of it;
    (d) adjoining it doubles the order to 2 n!, matching the engine's count.
    """
    n = kg.n
    f_swap, f_cycle = sym_generators(kg)
    alpha = complement_automorphism(kg)

    sym_group = group_closure([f_swap, f_cycle], order_cap=order_cap)
    n_factorial = math.factorial(n)
    if sym_group.order != n_factorial:
        raise StructureError(
            f"step (a): induced Sym closure has order {sym_group.order}, "
            f"expected {n_factorial}"
        )
    if alpha in sym_group.elements:
        raise StructureError("step (b): complementation lies inside the Sym image")
    if not (_commutes(alpha, f_swap) and _commutes(alpha, f_cycle)):
        raise StructureError("step (c): complementation fails to commute with a generator")
    product = group_closure([f_swap, f_cycle, alpha], order_cap=order_cap)
    if product.order != 2 * n_factorial:
        raise StructureError(
            f"step (d): product closure has order {product.order}, expected {2 * n_factorial}"
        )
    if product.order != aut_order:
        raise StructureError(
            f"step (d): engine reports |Aut| = {aut_order}, closure gives {product.order}"
        )
    return DirectProductReport(
        n=n,
        k=kg.k,
        sym_closure_order=sym_group.order,
        alpha_outside_sym=True,
        alpha_commutes=True,
        product_order=product.order,
        aut_order=aut_order,
    )


def _commutes(p: VertexPermutation, q: VertexPermutation) -> bool:
    pi, qi = p.images, q.images
    return all(pi[qi[x]] == qi[pi[x]] for x in range(len(pi)))


def _perm_order(images: tuple[int, ...]) -> int:
    seen = [False] * len(images)
    order = 1
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


@dataclass(frozen=True)
class RegularSubgroupSearch:
    subgroup: Optional[PermutationGroup]
    generator_bound: int
    candidates_checked: int

    @property
    def caveat(self) -> str:
        return (
            f"only subgroups generated by at most {self.generator_bound} elements "
            "were searched; absence here is not a proof"
        )

    def as_dict(self) -> dict:
        return {
            "found": self.subgroup is not None,
            "subgroup_order": None if self.subgroup is None else self.subgroup.order,
            "generator_bound": self.generator_bound,
            "candidates_checked": self.candidates_checked,
            "caveat": self.caveat,
        }


def find_regular_subgroup(
    group: PermutationGroup,
    vertex_count: int,
    generator_bound: int = 2,
) -> RegularSubgroupSearch:
    """Look for a subgroup acting regularly on the vertices.

    Scans subgroups generated by 1 or 2 elements of the (fully enumerated)
    input group; a hit certifies that the graph is a Cayley graph, a miss is
    only evidence.  Element orders must divide the target order, which prunes
    most pairs before any closure runs.
    """
    if generator_bound not in (1, 2):
        raise DomainError("generator bound must be 1 or 2")
    if not group.is_enumerated:
        raise DomainError("regular-subgroup search needs a fully enumerated group")

    degree = group.degree
    images = [g.images for g in group.elements]
    candidates = [
        imgs for imgs in images if vertex_count % _perm_order(imgs) == 0
    ]
    checked = 0

    def transitive(gens: list[tuple[int, ...]]) -> bool:
        seen = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for g in gens:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == vertex_count

    def wrap(gens: list[tuple[int, ...]], elements: set[tuple[int, ...]]) -> PermutationGroup:
        return PermutationGroup(
            generators=tuple(VertexPermutation(g) for g in gens),
            degree=degree,
            elements=tuple(VertexPermutation(e) for e in sorted(elements)),
        )

    for g in candidates:
        checked += 1
        if _perm_order(g) == vertex_count and transitive([g]):
            elements = closure_images([g], degree, order_cap=vertex_count)
            return RegularSubgroupSearch(wrap([g], elements), generator_bound, checked)
    if generator_bound >= 2:
        for i, g in enumerate(candidates):
            for h in candidates[i + 1:]:
                checked += 1
                try:
                    elements = closure_images([g, h], degree, order_cap=vertex_count)
                except OrderCapExceeded:
                    continue
                if len(elements) == vertex_count and transitive([g, h]):
                    return RegularSubgroupSearch(
                        wrap([g, h], elements), generator_bound, checked
                    )
    return RegularSubgroupSearch(None, generator_bound, checked)


@dataclass(frozen=True)
class Question2Row:
    n: int
    k: int
    vertices: int
    aut_order: Optional[int]
    doubled_factorial: int
    comparison: str  # "equal" | "not equal" | "skipped"
    skip_reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "vertices": self.vertices,
            "aut_order": self.aut_order,
            "two_n_factorial": self.doubled_factorial,
            "comparison": self.comparison,
            "skip_reason": self.skip_reason,
        }


def feasible_parameters(n_max: int, k_max: Optional[int] = None) -> list[tuple[int, int]]:
    """All (n, k) with 3 <= n <= n_max, k >= 1, n >= 2k + 1."""
    out = []
    for n in range(3, n_max + 1):
        for k in range(1, (n - 1) // 2 + 1):
            if k_max is not None and k > k_max:
                break
            out.append((n, k))
    return out


def explore_question2(
    n_max: int,
    k_max: Optional[int] = None,
    size_limit: int = DEFAULT_SIZE_LIMIT,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> list[Question2Row]:
    """Tabulate |Aut(H(n,k))| against 2 n! for every feasible (n, k).

    Rows report "equal" or "not equal" only; equality on the listed instances
    says nothing about unlisted ones.
    """
    rows = []
    for n, k in feasible_parameters(n_max, k_max):
        kg = build_bipartite_kneser(n, k)
        target = 2 * math.factorial(n)
        try:
            aut = automorphism_group(kg.graph, size_limit=size_limit, order_cap=order_cap)
        except (SizeLimitError, OrderCapExceeded) as exc:
            rows.append(
                Question2Row(n, k, kg.vertex_count, None, target, "skipped", str(exc))
            )
            continue
        comparison = "equal" if aut.order == target else "not equal"
        rows.append(Question2Row(n, k, kg.vertex_count, aut.order, target, comparison))
    return rows


def question2_table(rows: list[Question2Row]) -> str:
    header = f"{'n':>3} {'k':>3} {'vertices':>9} {'|Aut|':>10} {'2*n!':>10}  comparison"
    lines = [header, "-" * len(header)]
    for row in rows:
        order = "-" if row.aut_order is None else str(row.aut_order)
        lines.append(
            f"{row.n:>3} {row.k:>3} {row.vertices:>9} {order:>10} "
            f"{row.doubled_factorial:>10}  {row.comparison}"
        )
    lines.append("evidence only: rows beyond this table remain open")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Question1Row:
    n: int
    k: int
    vertices: int
    aut_order: Optional[int]
    regular_subgroup_order: Optional[int]
    verdict: str
    skip_reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "vertices": self.vertices,
            "aut_order": self.aut_order,
            "regular_subgroup_order": self.regular_subgroup_order,
            "verdict": self.verdict,
            "skip_reason": self.skip_reason,
        }


def explore_question1(
    n_max: int,
    k_max: Optional[int] = None,
    generator_bound: int = 2,
    size_limit: int = DEFAULT_SIZE_LIMIT,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> list[Question1Row]:
    """Bounded Cayley-ness evidence: search Aut(H(n,k)) for a regular subgroup."""
    rows = []
    for n, k in feasible_parameters(n_max, k_max):
        kg = build_bipartite_kneser(n, k)
        try:
            aut = automorphism_group(kg.graph, size_limit=size_limit, order_cap=order_cap)
        except (SizeLimitError, OrderCapExceeded) as exc:
            rows.append(
                Question1Row(n, k, kg.vertex_count, None, None, "skipped", str(exc))
            )
            continue
        search = find_regular_subgroup(aut, kg.vertex_count, generator_bound)
        if search.subgroup is not None:
            verdict = "regular subgroup found: Cayley graph (regular-action criterion)"
            order = search.subgroup.order
        else:
            verdict = (
                f"no regular subgroup among subgroups generated by at most "
                f"{generator_bound} elements; consistent with a non-Cayley graph, "
                "not a proof (search not exhaustive)"
            )
            order = None
        rows.append(Question1Row(n, k, kg.vertex_count, aut.order, order, verdict))
    return rows
