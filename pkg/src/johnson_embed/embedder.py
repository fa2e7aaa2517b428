"""Build verified embeddings into Johnson graphs and hypercubes.

The Johnson pipeline gates on the wallspace condition, groups vertical
edges into classes, rebuilds the bipartite root of the atom graph, and
propagates vertex labels down a BFS tree: the root's b side becomes the
basepoint's label, and each tree edge swaps its class's b-element for its
a-element.  Every produced labeling is re-verified against the full
distance matrix before being returned; a verification failure is reported
as an INTERNAL certificate and indicates a bug, never a property of the
input.

The hypercube embedding is the classical bipartite construction: each edge
split must have convex sides, splits are deduplicated into coordinates, and
a vertex's label collects the coordinates whose far side contains it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .atom import ThetaClasses, atom_graph, theta1_classes
from .graphs import (
    ConsistencyError,
    DistanceMatrix,
    Graph,
    OddCycleWitness,
    is_bipartite,
    is_convex,
)
from .rootgraph import BipartiteRoot, RootCertificate, bipartite_root
from .walls import WallSystem, WcCertificate, check_wc, w_sets

WC = "WC"
AGC = "AGC"
INTERNAL = "INTERNAL"
NOT_BIPARTITE = "NOT_BIPARTITE"
NONCONVEX_HALFSPACE = "NONCONVEX_HALFSPACE"


@dataclass(frozen=True)
class Embedding:
    """Isometric embedding into the Johnson graph of m-subsets of a ground set.

    labels[v] is vertex v's m-subset of 0..ground_set_size-1; pairwise
    symmetric differences equal twice the graph distance.
    """

    m: int
    ground_set_size: int
    labels: tuple[frozenset[int], ...]
    basepoint: int


@dataclass(frozen=True)
class LabelAssignment:
    """Per-class label pairs: class i swaps pairs[i][0] (b side) for pairs[i][1]."""

    basepoint: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class InternalWitness:
    """Diagnostic payload for a pipeline consistency failure."""

    reason: str
    data: tuple = ()


@dataclass(frozen=True)
class RejectionCertificate:
    """Why the graph was rejected: the failing stage plus its witness."""

    stage: str
    payload: "WcCertificate | RootCertificate | InternalWitness"


@dataclass(frozen=True)
class PipelineRun:
    """Everything one pipeline invocation produced, for diagnostics and tests."""

    basepoint: int
    wall_system: WallSystem | None = None
    wc_certificate: WcCertificate | None = None
    classes: ThetaClasses | None = None
    sigma: Graph | None = None
    root: BipartiteRoot | None = None
    root_certificate: RootCertificate | None = None
    assignment: LabelAssignment | None = None
    embedding: Embedding | None = None
    internal: InternalWitness | None = None

    @property
    def result(self) -> "Embedding | RejectionCertificate":
        if self.wc_certificate is not None:
            return RejectionCertificate(WC, self.wc_certificate)
        if self.root_certificate is not None:
            return RejectionCertificate(AGC, self.root_certificate)
        if self.internal is not None:
            return RejectionCertificate(INTERNAL, self.internal)
        assert self.embedding is not None
        return self.embedding


def bfs_tree(g: Graph, b: int) -> tuple[int | None, ...]:
    """Parent mapping of the BFS tree rooted at b.

    The parent of v is its smallest neighbor one step closer to b;
    parent[b] is None.
    """
    d = g.distances()
    parents: list[int | None] = []
    for v in range(g.n):
        if v == b:
            parents.append(None)
            continue
        parents.append(min(w for w in g.neighbors[v] if d[b][w] == d[b][v] - 1))
    return tuple(parents)


def run_pipeline(g: Graph, b: int = 0, *, paranoid: bool = False) -> PipelineRun:
    """Run the full Johnson embedding pipeline from basepoint b."""
    if not 0 <= b < g.n:
        raise ValueError(f"basepoint {b} out of range")
    d = g.distances()
    wc = check_wc(g, d)
    if isinstance(wc, WcCertificate):
        return PipelineRun(basepoint=b, wc_certificate=wc)
    classes = theta1_classes(g, d, b)
    sigma = atom_graph(g, d, b, classes, paranoid=paranoid)
    root = bipartite_root(sigma)
    if isinstance(root, RootCertificate):
        return PipelineRun(basepoint=b, wall_system=wc, classes=classes,
                           sigma=sigma, root_certificate=root)
    b_ids = sorted(root.b_side)
    a_ids = sorted(root.a_side)
    dense = {rid: i for i, rid in enumerate(b_ids)}
    dense.update({rid: len(b_ids) + i for i, rid in enumerate(a_ids)})
    assignment = LabelAssignment(
        b, tuple((dense[i], dense[j]) for i, j in root.vertex_to_edge))
    m = len(b_ids)
    ground = len(b_ids) + len(a_ids)
    edge_class = {
        e: idx for idx, cls in enumerate(classes.classes) for e in cls
    }
    parent = bfs_tree(g, b)
    labels: list[frozenset[int] | None] = [None] * g.n
    labels[b] = frozenset(range(m))
    internal: InternalWitness | None = None
    for v in sorted(range(g.n), key=lambda v: (d[b][v], v)):
        if v == b:
            continue
        u = parent[v]
        lam = edge_class.get((u, v))
        if lam is None:
            internal = InternalWitness("tree edge missing from the vertical classes", (u, v))
            break
        i, j = assignment.pairs[lam]
        lu = labels[u]
        if i not in lu or j in lu:
            internal = InternalWitness(
                "class label pair does not apply to the parent label",
                (u, v, lam, i, j, tuple(sorted(lu))))
            break
        labels[v] = (lu - {i}) | {j}
    if internal is None:
        verdict = verify_embedding(d, labels)
        if verdict is not True:
            internal = InternalWitness(
                "constructed labeling failed isometry verification",
                (verdict.x, verdict.y, verdict.sym_diff, verdict.expected))
    if internal is not None:
        return PipelineRun(basepoint=b, wall_system=wc, classes=classes,
                           sigma=sigma, root=root, assignment=assignment,
                           internal=internal)
    embedding = Embedding(m, ground, tuple(labels), b)
    return PipelineRun(basepoint=b, wall_system=wc, classes=classes,
                       sigma=sigma, root=root, assignment=assignment,
                       embedding=embedding)


def build_embedding(g: Graph, b: int = 0, *, paranoid: bool = False
                    ) -> "Embedding | RejectionCertificate":
    """Decide Johnson embeddability: a verified Embedding or a certificate."""
    return run_pipeline(g, b, paranoid=paranoid).result


@dataclass(frozen=True)
class IsometryWitness:
    """Vertex pair whose label symmetric difference misses the expected value."""

    x: int
    y: int
    sym_diff: int
    expected: int


def verify_embedding(d: DistanceMatrix, labels) -> "bool | IsometryWitness":
    """Check |labels[x] ^ labels[y]| == 2 d(x,y) for every vertex pair.

    labels may use any hashable universe but must all have the same size;
    unequal sizes raise ValueError.  Returns True or the first witness in
    lexicographic pair order.
    """
    sets = [frozenset(lab) for lab in labels]
    if len(sets) != d.n:
        raise ValueError(f"expected {d.n} labels, got {len(sets)}")
    if len({len(s) for s in sets}) > 1:
        raise ValueError("labels must all have the same size")
    for x in range(d.n):
        for y in range(x + 1, d.n):
            diff = len(sets[x] ^ sets[y])
            if diff != 2 * d[x][y]:
                return IsometryWitness(x, y, diff, 2 * d[x][y])
    return True


@dataclass(frozen=True)
class HypercubeEmbedding:
    """Isometric embedding into a hypercube: labels are coordinate subsets."""

    dimension: int
    labels: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class HypercubeCertificate:
    """Why no hypercube embedding exists: odd cycle or a non-convex side."""

    kind: str
    odd_cycle: tuple[int, ...] | None = None
    edge: tuple[int, int] | None = None
    half: tuple[int, ...] | None = None
    witness: object = None


def embed_hypercube(g: Graph, d: DistanceMatrix | None = None
                    ) -> "HypercubeEmbedding | HypercubeCertificate":
    """Decide hypercube embeddability (bipartite plus convex edge sides).

    Coordinates are the deduplicated edge splits in first-appearance order;
    a vertex's label collects the coordinates whose side away from vertex 0
    contains it.  The labeling is re-verified against all pairwise
    distances before being returned.
    """
    if d is None:
        d = g.distances()
    coloring = is_bipartite(g)
    if isinstance(coloring, OddCycleWitness):
        return HypercubeCertificate(NOT_BIPARTITE, odd_cycle=coloring.cycle)
    seen: dict[frozenset[frozenset[int]], int] = {}
    far_sides: list[frozenset[int]] = []
    for u, v in g.edges:
        w_uv, w_vu, w_eq = w_sets(d, u, v)
        if w_eq:
            raise ConsistencyError(
                f"edge ({u}, {v}) has equidistant vertices in a bipartite graph")
        for half, endpoint in ((w_uv, u), (w_vu, v)):
            verdict = is_convex(d, half)
            if verdict is not True:
                return HypercubeCertificate(
                    NONCONVEX_HALFSPACE, edge=(u, v), half=half, witness=verdict)
        key = frozenset({frozenset(w_uv), frozenset(w_vu)})
        if key not in seen:
            seen[key] = len(far_sides)
            far_sides.append(frozenset(w_vu if 0 in w_uv else w_uv))
    labels = tuple(
        frozenset(i for i, far in enumerate(far_sides) if v in far)
        for v in range(g.n)
    )
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if len(labels[x] ^ labels[y]) != d[x][y]:
                raise ConsistencyError(
                    f"hypercube labeling failed verification at ({x}, {y})")
    return HypercubeEmbedding(len(far_sides), labels)
