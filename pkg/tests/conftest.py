import random

from hypothesis import strategies as st

from radiolabel.graph import Graph

INF = float("inf")


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Reference all-pairs distances, independent of the BFS path."""
    p = g.p
    d = [[0 if i == j else (1 if j in g.adjacency[i] else INF) for j in range(p)] for i in range(p)]
    for k in range(p):
        for i in range(p):
            for j in range(p):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def random_connected_graph(rng: random.Random, p: int, extra: float) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    edges = {(rng.randrange(v), v) for v in range(1, p)}
    for u in range(p):
        for v in range(u + 1, p):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return Graph.from_edges([f"x{i}" for i in range(p)], sorted(edges))


def random_graph_sample(count: int = 60, max_p: int = 7, seed: int = 20240607) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(2, max_p), rng.choice([0.1, 0.3, 0.5, 0.8])) for _ in range(count)]


@st.composite
def connected_graphs(draw, min_p: int = 1, max_p: int = 9) -> Graph:
    p = draw(st.integers(min_p, max_p))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, p)]
    edges = {(parents[v - 1], v) for v in range(1, p)}
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p) if (u, v) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))))
    return Graph.from_edges([f"x{i}" for i in range(p)], sorted(edges))


@st.composite
def graphs(draw, max_p: int = 9) -> Graph:
    """Possibly disconnected simple graphs."""
    p = draw(st.integers(1, max_p))
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges([f"x{i}" for i in range(p)], chosen)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[name] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
