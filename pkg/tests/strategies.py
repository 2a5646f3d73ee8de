"""Hypothesis strategies producing small matroids."""

from hypothesis import strategies as st

from matcrit.constructions import graphic, uniform


@st.composite
def graphs(draw, max_vertices=6, max_edges=9, loops=True):
    vertices = draw(st.integers(1, max_vertices))
    pairs = st.tuples(st.integers(0, vertices - 1), st.integers(0, vertices - 1))
    edges = draw(st.lists(pairs, min_size=0, max_size=max_edges))
    if not loops:
        edges = [(u, v) for u, v in edges if u != v]
    return vertices, edges


@st.composite
def matroids(draw, max_elements=9):
    """Graphic matroids, their duals, and uniform matroids."""
    kind = draw(st.sampled_from(["graphic", "cographic", "uniform"]))
    if kind == "uniform":
        n = draw(st.integers(0, max_elements))
        return uniform(draw(st.integers(0, n)), n)
    vertices, edges = draw(graphs(max_edges=max_elements))
    M = graphic(vertices, edges)
    return M.dual() if kind == "cographic" else M


@st.composite
def matroid_and_subset(draw, max_elements=9):
    M = draw(matroids(max_elements))
    return M, draw(st.integers(0, M.ground))


@st.composite
def matroid_and_permutation(draw, max_elements=9):
    M = draw(matroids(max_elements))
    return M, draw(st.permutations(range(M.n)))
