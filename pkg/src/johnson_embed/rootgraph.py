"""Recognize line graphs of bipartite graphs and rebuild a bipartite root.

The input (typically an atom graph, possibly disconnected) is a line graph
of a bipartite graph exactly when it has no induced claw or diamond, every
vertex lies in at most two maximal cliques, and the reconstructed root is
2-colorable.  In a claw-free diamond-free graph the maximal cliques are
edge-disjoint and cover all edges, so they form the Krausz partition
directly.  The root has one vertex per clique; an input vertex in two
cliques becomes the root edge joining them, a vertex in one clique gets a
private pendant root vertex, and an isolated input vertex gets a fresh
two-vertex root edge.  A triangle component of the input is thereby read as
the line graph of a 3-star rather than of a 3-cycle, which is the only
ambiguity and the only reading with a bipartite root.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import ConsistencyError, Graph, OddCycleWitness, is_bipartite

CLAW = "CLAW"
DIAMOND = "DIAMOND"
VERTEX_IN_3_CLIQUES = "VERTEX_IN_3_CLIQUES"
ODD_CYCLE_IN_ROOT = "ODD_CYCLE_IN_ROOT"


@dataclass(frozen=True)
class RootCertificate:
    """Refutation that the input is a line graph of a bipartite graph.

    CLAW: vertices = (center, leaf, leaf, leaf), the leaves pairwise
    non-adjacent.  DIAMOND: vertices = (u, v, w, x) where uv is an edge and
    w, x are non-adjacent common neighbors.  VERTEX_IN_3_CLIQUES: vertices =
    (v,), cliques = three-plus maximal cliques through v.
    ODD_CYCLE_IN_ROOT: cycle = odd cycle in the reconstructed root.
    """

    kind: str
    vertices: tuple[int, ...] = ()
    cliques: tuple[tuple[int, ...], ...] = ()
    cycle: tuple[int, ...] = ()


def find_claw_or_diamond(g: Graph) -> RootCertificate | None:
    """First induced claw (checked before diamonds), else first diamond, else None.

    Claws are enumerated by (center, sorted leaf triple), diamonds by
    (sorted edge, sorted non-adjacent common neighbor pair).
    """
    for v in range(g.n):
        nb = g.neighbors[v]
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return RootCertificate(CLAW, vertices=(v, a, b, c))
    for u, v in g.edges:
        common = [w for w in g.neighbors[u] if g.has_edge(w, v)]
        for w, x in combinations(common, 2):
            if not g.has_edge(w, x):
                return RootCertificate(DIAMOND, vertices=(u, v, w, x))
    return None


@dataclass(frozen=True)
class KrauszPartition:
    """Edge-disjoint maximal cliques covering all edges, plus memberships.

    cliques are sorted by vertex content; membership[v] lists the indices of
    the at most two cliques containing v (isolated vertices get none).
    """

    cliques: tuple[tuple[int, ...], ...]
    membership: tuple[tuple[int, ...], ...]


def krausz_partition(g: Graph) -> KrauszPartition | RootCertificate:
    """Partition edges into maximal cliques; filter certificates pass through.

    Runs the claw/diamond filter first.  In the filtered graph, the maximal
    clique on an edge is the edge plus the common neighborhood of its ends.
    """
    cert = find_claw_or_diamond(g)
    if cert is not None:
        return cert
    cliques: set[frozenset[int]] = set()
    for u, v in g.edges:
        clique = frozenset({u, v} | {w for w in g.neighbors[u] if g.has_edge(w, v)})
        for a, b in combinations(sorted(clique), 2):
            if not g.has_edge(a, b):
                raise ConsistencyError(
                    f"common neighborhood of edge ({u}, {v}) is not a clique")
        cliques.add(clique)
    ordered = tuple(sorted(tuple(sorted(c)) for c in cliques))
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for idx, clique in enumerate(ordered):
        for v in clique:
            membership[v].append(idx)
    for v in range(g.n):
        if len(membership[v]) > 2:
            return RootCertificate(
                VERTEX_IN_3_CLIQUES, vertices=(v,),
                cliques=tuple(ordered[i] for i in membership[v]))
    return KrauszPartition(ordered, tuple(tuple(m) for m in membership))


@dataclass(frozen=True)
class BipartiteRoot:
    """A bipartite graph whose line graph is the input.

    Root vertices are numbered cliques first, then pendant vertices for
    single-clique input vertices, then fresh pairs for isolated input
    vertices.  vertex_to_edge[x] is input vertex x's root edge, ordered
    (b_end, a_end); it is a bijection onto the root's edges.
    """

    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    vertex_to_edge: tuple[tuple[int, int], ...]
    root: Graph

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.vertex_to_edge


def bipartite_root(g: Graph) -> BipartiteRoot | RootCertificate:
    """Reconstruct the bipartite root of g, or certify that none exists.

    Per root component the smaller color class joins the b side, ties going
    to the class of the component's smallest root vertex.
    """
    kp = krausz_partition(g)
    if isinstance(kp, RootCertificate):
        return kp
    next_id = len(kp.cliques)
    raw_edges: list[tuple[int, int]] = []
    for v in range(g.n):
        mem = kp.membership[v]
        if len(mem) == 2:
            raw_edges.append((mem[0], mem[1]))
        elif len(mem) == 1:
            raw_edges.append((mem[0], next_id))
            next_id += 1
        else:
            raw_edges.append((next_id, next_id + 1))
            next_id += 2
    root = Graph(next_id, raw_edges, require_connected=False)
    _verify_line_graph(g, raw_edges)
    coloring = is_bipartite(root)
    if isinstance(coloring, OddCycleWitness):
        return RootCertificate(ODD_CYCLE_IN_ROOT, cycle=coloring.cycle)
    b_side = _pick_b_side(root, coloring.colors)
    a_side = tuple(r for r in range(root.n) if r not in b_side)
    oriented = tuple(
        (i, j) if i in b_side else (j, i) for i, j in raw_edges
    )
    return BipartiteRoot(a_side, tuple(sorted(b_side)), oriented, root)


def _verify_line_graph(g: Graph, raw_edges: list[tuple[int, int]]) -> None:
    # Input vertices must be adjacent exactly when their root edges share an end.
    for x, y in combinations(range(g.n), 2):
        shared = bool(set(raw_edges[x]) & set(raw_edges[y]))
        if shared != g.has_edge(x, y):
            raise ConsistencyError(
                f"root reconstruction broke adjacency of input vertices {x}, {y}")


def _pick_b_side(root: Graph, colors: tuple[int, ...]) -> set[int]:
    b_side: set[int] = set()
    seen: set[int] = set()
    for r in range(root.n):
        if r in seen:
            continue
        comp = _component_of(root, r)
        seen |= comp
        side0 = {v for v in comp if colors[v] == 0}
        side1 = comp - side0
        # The component's smallest vertex has color 0, so ties pick side0.
        b_side |= side1 if len(side1) < len(side0) else side0
    return b_side


def _component_of(root: Graph, start: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in root.neighbors[u]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def line_graph(h: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of h plus the edge order naming its vertices."""
    edge_order = h.edges
    index = {e: i for i, e in enumerate(edge_order)}
    edges = []
    for (e, i) in index.items():
        for (f, j) in index.items():
            if i < j and (set(e) & set(f)):
                edges.append((i, j))
    return Graph(len(edge_order), edges, require_connected=False), edge_order
