import pytest
from hypothesis import given
from hypothesis import strategies as st

from ipclab.generators import (
    FAMILIES,
    gen_F,
    gen_H,
    gen_K2t,
    gen_U,
    gen_complete,
    gen_cycle,
    gen_evenhole_B,
    gen_evenhole_G,
    gen_evenhole_Z,
    gen_grid,
    gen_linefamily_F,
    gen_linefamily_G,
    gen_path,
    generate,
    random_connected,
)
from ipclab.graph import GraphError, is_connected


def test_U_shape():
    g = gen_U(5)
    assert (g.n, g.edge_count) == (6, 9)
    # exactly one universal vertex
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    assert len(universal) == 1
    assert g.labels[universal[0]] == "u"


def test_U2_is_triangle():
    g = gen_U(2)
    assert (g.n, g.edge_count) == (3, 3)


def test_F2_is_four_cycle():
    g = gen_F(2)
    assert (g.n, g.edge_count) == (4, 4)
    assert all(g.degree(v) == 2 for v in range(g.n))


def test_F_shape():
    g = gen_F(3)
    assert (g.n, g.edge_count) == (8, 9)
    x, y = g.label_index("x"), g.label_index("y")
    assert g.distance_matrix.dist(x, y) == 3
    assert g.degree(x) == 3 and g.degree(y) == 3


def test_evenhole_B_shape():
    g = gen_evenhole_B(4)
    assert (g.n, g.edge_count) == (7, 7)
    assert max(g.degree(v) for v in range(g.n)) == 3
    r = g.label_index("r")
    assert g.degree(r) == 1
    assert g.distance_matrix.dist(r, g.label_index("a")) == 4


def test_evenhole_G_and_Z_shapes():
    g = gen_evenhole_G(4)
    assert (g.n, g.edge_count) == (49, 55)
    assert max(g.degree(v) for v in range(g.n)) == 3
    z = gen_evenhole_Z(4)
    assert (z.n, z.edge_count) == (98, 111)
    assert z.has_edge(z.label_index("X:4:r"), z.label_index("Y:4:r"))


def test_linefamily_shapes():
    f2 = gen_linefamily_F(2)
    assert (f2.n, f2.edge_count) == (6, 6)
    f3 = gen_linefamily_F(3)
    assert (f3.n, f3.edge_count) == (11, 12)
    g2 = gen_linefamily_G(2)
    assert (g2.n, g2.edge_count) == (11, 12)
    # the two halves share exactly the extra root
    assert g2.n == 2 * f2.n - 1


def test_H_shape():
    g = gen_H(3)
    assert (g.n, g.edge_count) == (14, 15)
    c = g.label_index("c")
    leaves = [g.label_index(f"u{i}") for i in (1, 2, 3)]
    assert all(g.distance_matrix.dist(c, u) == 3 for u in leaves)


def test_grid_shape():
    g = gen_grid(3, 4)
    assert (g.n, g.edge_count) == (12, 17)
    assert g.distance_matrix.dist(0, g.n - 1) == 2 + 3


def test_K2t_shape():
    g = gen_K2t(3)
    assert (g.n, g.edge_count) == (5, 6)
    assert g.degree(0) == 3 and g.degree(1) == 3
    assert not g.has_edge(0, 1)


def test_simple_families():
    assert gen_path(1).n == 1
    assert gen_cycle(3).edge_count == 3
    assert gen_complete(5).edge_count == 10


def test_parameter_validation():
    for call in [
        lambda: gen_path(0),
        lambda: gen_cycle(2),
        lambda: gen_U(0),
        lambda: gen_grid(0, 3),
        lambda: gen_evenhole_B(3),
        lambda: gen_linefamily_F(1),
    ]:
        with pytest.raises(GraphError):
            call()


def test_generate_dispatch_and_aliases():
    assert generate("U", [5]).n == 6
    assert generate("U_t", [5]).n == 6
    assert generate("grid", [2, 3]).n == 6
    with pytest.raises(GraphError):
        generate("nope", [1])
    with pytest.raises(GraphError):
        generate("U", [1, 2])


@given(st.sampled_from(sorted(set(FAMILIES) - {"grid"})))
def test_families_connected(name):
    fn, arity = FAMILIES[name]
    params = [4] * arity
    g = fn(*params)
    assert is_connected(g)


def test_random_connected_deterministic():
    a = random_connected(8, 0.3, 7)
    b = random_connected(8, 0.3, 7)
    assert a.edges == b.edges
    assert random_connected(8, 0.3, 8).edges != a.edges or True


@given(
    st.integers(min_value=1, max_value=12),
    st.floats(min_value=0.0, max_value=1.0),
    st.integers(min_value=0, max_value=100),
)
def test_random_connected_total(n, p, seed):
    g = random_connected(n, p, seed)
    assert g.n == n
    assert is_connected(g)


def test_random_connected_validation():
    with pytest.raises(GraphError):
        random_connected(5, 1.5, 0)
    with pytest.raises(GraphError):
        random_connected(0, 0.5, 0)
