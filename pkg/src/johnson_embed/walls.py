"""Per-edge halfspace splits and the wallspace condition.

Every edge uv splits the vertex set into the side closer to u, the side
closer to v, and an equidistant remainder.  The wallspace condition requires
the equidistant remainder to induce at most two components and both ways of
attaching those components to the strict sides to yield complementary convex
halfspaces.  A graph passing the condition gets a WallSystem: the per-edge
data plus the deduplicated walls with multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    ConsistencyError,
    ConvexityWitness,
    DistanceMatrix,
    Graph,
    GraphError,
    induced_components,
    is_convex,
)

PRIME = "PRIME"
DOUBLE_PRIME = "DOUBLE_PRIME"
TOO_MANY_COMPONENTS = "TOO_MANY_COMPONENTS"
NONCONVEX_HALFSPACE = "NONCONVEX_HALFSPACE"


def w_sets(d: DistanceMatrix, u: int, v: int):
    """Split all vertices by distance comparison against u and v."""
    w_uv = []
    w_vu = []
    w_eq = []
    for x in range(d.n):
        dxu, dxv = d[x][u], d[x][v]
        if dxu < dxv:
            w_uv.append(x)
        elif dxv < dxu:
            w_vu.append(x)
        else:
            w_eq.append(x)
    return tuple(w_uv), tuple(w_vu), tuple(w_eq)


@dataclass(frozen=True)
class EdgeWalls:
    """Raw split data for one edge: strict sides and equidistant components."""

    edge: tuple[int, int]
    w_uv: tuple[int, ...]
    w_vu: tuple[int, ...]
    eq_components: tuple[tuple[int, ...], ...]


def splits(g: Graph, d: DistanceMatrix, edge: tuple[int, int]) -> EdgeWalls:
    """Compute the halfspace split of the given oriented edge."""
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    w_uv, w_vu, w_eq = w_sets(d, u, v)
    return EdgeWalls((u, v), w_uv, w_vu, induced_components(g, w_eq))


@dataclass(frozen=True)
class Wall:
    """One complementary halfspace pair produced by an edge.

    neg contains the tail of the source edge, pos the head.  The PRIME
    variant attaches the first equidistant component to the tail side, the
    DOUBLE_PRIME variant attaches it to the head side.
    """

    neg: tuple[int, ...]
    pos: tuple[int, ...]
    source_edge: tuple[int, int]
    variant: str


@dataclass(frozen=True)
class WcCertificate:
    """Refutation of the wallspace condition at a single edge."""

    kind: str
    edge: tuple[int, int]
    component_count: int | None = None
    components: tuple[tuple[int, ...], ...] | None = None
    half: tuple[int, ...] | None = None
    variant: str | None = None
    witness: ConvexityWitness | None = None


def check_wc_edge(g: Graph, d: DistanceMatrix, edge) -> "tuple[Wall, Wall] | WcCertificate":
    """Check the wallspace condition at one edge.

    Returns the edge's two walls, or a certificate naming either more than
    two equidistant components or the first non-convex halfspace (halves are
    checked in the order PRIME neg, PRIME pos, DOUBLE_PRIME neg,
    DOUBLE_PRIME pos).
    """
    return _walls_from_splits(d, splits(g, d, edge))


def _walls_from_splits(d: DistanceMatrix, ew: EdgeWalls) -> "tuple[Wall, Wall] | WcCertificate":
    comps = ew.eq_components
    if len(comps) > 2:
        return WcCertificate(TOO_MANY_COMPONENTS, ew.edge,
                             component_count=len(comps), components=comps)
    eq1 = comps[0] if comps else ()
    eq2 = comps[1] if len(comps) == 2 else ()
    prime = Wall(_merge(ew.w_uv, eq1), _merge(ew.w_vu, eq2), ew.edge, PRIME)
    double = Wall(_merge(ew.w_uv, eq2), _merge(ew.w_vu, eq1), ew.edge, DOUBLE_PRIME)
    for wall in (prime, double):
        for half in (wall.neg, wall.pos):
            verdict = is_convex(d, half)
            if verdict is not True:
                return WcCertificate(NONCONVEX_HALFSPACE, ew.edge, half=half,
                                     variant=wall.variant, witness=verdict)
    return prime, double


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b))


@dataclass(frozen=True)
class SystemWall:
    """A deduplicated wall: an unordered vertex bipartition with multiplicity.

    halves are ordered so the half containing vertex 0 comes first.
    Multiplicity 2 means the source edge's two walls coincide (empty
    equidistant set); multiplicity 1 means they differ.
    """

    halves: tuple[tuple[int, ...], tuple[int, ...]]
    multiplicity: int

    def separates(self, u: int, v: int) -> bool:
        a, b = self.halves
        return (u in a) != (v in a)


@dataclass(frozen=True)
class WallSystem:
    """All per-edge walls of a graph passing the wallspace condition."""

    edge_walls: tuple[EdgeWalls, ...]
    wall_pairs: tuple[tuple[Wall, Wall], ...]
    walls: tuple[SystemWall, ...]

    def separation(self, u: int, v: int) -> int:
        """Total multiplicity of walls separating u from v."""
        return sum(w.multiplicity for w in self.walls if w.separates(u, v))


def check_wc(g: Graph, d: DistanceMatrix) -> "WallSystem | WcCertificate":
    """Check the wallspace condition on every edge, failing fast.

    Edges are scanned in lexicographic order; the first failing edge's
    certificate is returned.  On success the walls of all edges are
    deduplicated into SystemWalls ordered by first appearance.
    """
    edge_walls: list[EdgeWalls] = []
    wall_pairs: list[tuple[Wall, Wall]] = []
    per_key: dict[frozenset[frozenset[int]], int] = {}
    order: list[frozenset[frozenset[int]]] = []
    for edge in g.edges:
        ew = splits(g, d, edge)
        result = _walls_from_splits(d, ew)
        if isinstance(result, WcCertificate):
            return result
        prime, double = result
        edge_walls.append(ew)
        wall_pairs.append(result)
        k1 = _wall_key(prime)
        k2 = _wall_key(double)
        contributions = {k1: 2} if k1 == k2 else {k1: 1, k2: 1}
        for key, mult in contributions.items():
            if key not in per_key:
                per_key[key] = mult
                order.append(key)
            elif per_key[key] != mult:
                raise ConsistencyError(
                    f"wall {key} arises with inconsistent multiplicity")
    system_walls = tuple(
        SystemWall(_canonical_halves(key), per_key[key]) for key in order
    )
    return WallSystem(tuple(edge_walls), tuple(wall_pairs), system_walls)


def check_wc_all(g: Graph, d: DistanceMatrix) -> list[WcCertificate]:
    """Exhaustive variant: certificates for every failing edge (empty if none)."""
    certs = []
    for edge in g.edges:
        result = check_wc_edge(g, d, edge)
        if isinstance(result, WcCertificate):
            certs.append(result)
    return certs


def _wall_key(wall: Wall) -> frozenset[frozenset[int]]:
    return frozenset({frozenset(wall.neg), frozenset(wall.pos)})


def _canonical_halves(key: frozenset[frozenset[int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a, b = sorted((tuple(sorted(h)) for h in key), key=lambda h: 0 not in h)
    return a, b
