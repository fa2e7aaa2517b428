import pytest

from johnson_embed import Graph, build_embedding, gen_family, random_connected_graph


def named_corpus() -> list[tuple[str, Graph]]:
    """Small graphs from every generator family, used across test modules."""
    out = []
    for m, n in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 6)]:
        out.append((f"johnson_{m}_{n}", gen_family("johnson", (m, n))))
    for dim in range(1, 5):
        out.append((f"hypercube_{dim}", gen_family("hypercube", (dim,))))
    for k in range(3, 9):
        out.append((f"cycle_{k}", gen_family("cycle", (k,))))
    for k in range(2, 9):
        out.append((f"path_{k}", gen_family("path", (k,))))
    for c in range(2, 7):
        out.append((f"complete_{c}", gen_family("complete", (c,))))
    for a, b in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
        out.append((f"complete_bipartite_{a}_{b}",
                    gen_family("complete_bipartite", (a, b))))
    out.append(("petersen", gen_family("petersen", ())))
    return out


def random_corpus(count: int = 200) -> list[tuple[str, Graph]]:
    out = []
    for i in range(count):
        n = 3 + (i % 6)
        p = (0.3, 0.5, 0.7)[i % 3]
        out.append((f"random_{i}", random_connected_graph(n, p, seed=i)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return named_corpus()


@pytest.fixture(scope="session")
def full_corpus():
    return named_corpus() + random_corpus()


@pytest.fixture(scope="session")
def corpus_decisions(full_corpus):
    """Pipeline outcome for every corpus graph, computed once."""
    return [(name, g, build_embedding(g)) for name, g in full_corpus]
