"""Slow reference implementations used only to cross-check test expectations."""

from johnson_embed import Graph


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Backtracking search for a vertex bijection g -> h preserving adjacency.

    Fine for the graph sizes in this suite (at most 10 or so vertices).
    """
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return None
    mapping: list[int | None] = [None] * g.n
    used = [False] * h.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for target in range(h.n):
            if used[target] or g.degree(v) != h.degree(target):
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(mapping[u], target):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = target
            used[target] = True
            if extend(v + 1):
                return True
            mapping[v] = None
            used[target] = False
        return False

    if extend(0):
        return [m for m in mapping]
    return None


def two_colorable(g: Graph) -> bool:
    """Brute-force 2-colorability over all assignments, for small graphs only."""
    assert g.n <= 20
    for bits in range(1 << g.n):
        if all((bits >> u) & 1 != (bits >> v) & 1 for u, v in g.edges):
            return True
    return False
