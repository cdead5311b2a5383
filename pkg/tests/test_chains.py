import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopstatics import (
    Chain0,
    Chain1,
    FrameGraph,
    StructureError,
    boundary,
    chain_add,
    chain_scale,
    is_cycle,
)

from helpers import int_k5


def two_node_graph():
    return FrameGraph(
        nodes=[("x", (0.0, 0.0, 0.0)), ("y", (1.0, 0.0, 0.0))],
        edges=[("a", "x", "y")],
    )


class TestBoundary:
    def test_single_edge_head_minus_tail(self):
        g = two_node_graph()
        assert boundary(Chain1({"a": 1}), g) == Chain0({"y": 1, "x": -1})

    def test_zero_chain_maps_to_zero(self):
        g = two_node_graph()
        assert boundary(Chain1(), g) == Chain0()

    def test_closed_triangle_telescopes(self):
        g = int_k5()
        tri = Chain1({(0, 1): 1, (1, 2): 1, (0, 2): -1})
        assert boundary(tri, g) == Chain0()

    def test_unknown_edge_rejected(self):
        g = two_node_graph()
        with pytest.raises(StructureError, match="unknown bar"):
            boundary(Chain1({"nope": 1}), g)


class TestIsCycle:
    def test_triangle_is_cycle(self):
        g = int_k5()
        assert is_cycle(Chain1({(0, 1): 1, (1, 2): 1, (0, 2): -1}), g)

    def test_single_edge_is_not(self):
        g = two_node_graph()
        assert not is_cycle(Chain1({"a": 1}), g)

    def test_disconnected_formal_sum_is_cycle(self):
        # two vertex-disjoint triangles of K5 added formally: still boundary-free
        g = int_k5()
        both = Chain1(
            {(0, 1): 1, (1, 2): 1, (0, 2): -1, (2, 3): 1, (3, 4): 1, (2, 4): -1}
        )
        assert is_cycle(both, g)


class TestChainArithmetic:
    def test_coefficientwise_sum(self):
        a = Chain1({"a": 1, "b": 1})
        b = Chain1({"b": 1, "d": -1})
        assert chain_add(a, b) == Chain1({"a": 1, "b": 2, "d": -1})

    def test_commutative(self):
        a = Chain1({"a": 3, "b": -2})
        b = Chain1({"b": 5, "c": 1})
        assert chain_add(a, b) == chain_add(b, a)

    def test_additive_inverse(self):
        c = Chain1({"a": 2, "c": -7})
        assert chain_add(c, chain_scale(-1, c)) == Chain1()

    def test_scale_by_zero(self):
        assert chain_scale(0, Chain1({"a": 5})) == Chain1()

    def test_equality_ignores_explicit_zeros(self):
        assert Chain1({"a": 1, "b": 0}) == Chain1({"a": 1})
        assert Chain0({"x": 0}) == Chain0()

    def test_mixed_degree_rejected(self):
        with pytest.raises(StructureError):
            chain_add(Chain1({"a": 1}), Chain0({"x": 1}))

    def test_non_integer_coefficient_rejected(self):
        with pytest.raises(StructureError):
            Chain1({"a": 0.5})


_coeffs = st.dictionaries(
    st.sampled_from([(i, j) for i in range(5) for j in range(i + 1, 5)]),
    st.integers(-5, 5),
    max_size=10,
)


@settings(max_examples=200, deadline=None)
@given(_coeffs, _coeffs)
def test_boundary_is_a_homomorphism(ca, cb):
    g = int_k5()
    x, y = Chain1(ca), Chain1(cb)
    assert boundary(chain_add(x, y), g) == chain_add(boundary(x, g), boundary(y, g))


@settings(deadline=None)
@given(_coeffs, _coeffs, st.integers(-4, 4))
def test_chain_group_laws(ca, cb, k):
    x, y = Chain1(ca), Chain1(cb)
    assert chain_add(x, y) == chain_add(y, x)
    assert chain_scale(k, chain_add(x, y)) == chain_add(
        chain_scale(k, x), chain_scale(k, y)
    )


class TestFrameGraphValidation:
    def test_duplicate_node_id(self):
        with pytest.raises(StructureError, match="duplicate node"):
            FrameGraph(
                nodes=[("x", (0, 0, 0)), ("x", (1, 0, 0))],
                edges=[],
            )

    def test_duplicate_bar_id(self):
        with pytest.raises(StructureError, match="duplicate bar"):
            FrameGraph(
                nodes=[("x", (0, 0, 0)), ("y", (1, 0, 0))],
                edges=[("a", "x", "y"), ("a", "y", "x")],
            )

    def test_self_loop_rejected(self):
        with pytest.raises(StructureError, match="self-loop"):
            FrameGraph(nodes=[("x", (0, 0, 0))], edges=[("a", "x", "x")])

    def test_unknown_endpoint_names_bar(self):
        with pytest.raises(StructureError, match="'a'.*unknown node"):
            FrameGraph(nodes=[("x", (0, 0, 0))], edges=[("a", "x", "ghost")])

    def test_disconnected_rejected_with_diagnostic(self):
        with pytest.raises(StructureError, match="disconnected"):
            FrameGraph(
                nodes=[("x", (0, 0, 0)), ("y", (1, 0, 0)), ("z", (2, 0, 0))],
                edges=[("a", "x", "y")],
            )

    def test_parallel_bars_allowed(self):
        g = FrameGraph(
            nodes=[("x", (0, 0, 0)), ("y", (1, 0, 0))],
            edges=[("a", "x", "y"), ("b", "x", "y")],
        )
        assert g.e == 2

    def test_non_finite_position_rejected(self):
        with pytest.raises(StructureError, match="non-finite"):
            FrameGraph(nodes=[("x", (0, 0, np.inf))], edges=[])

    def test_bar_geometry(self):
        g = two_node_graph()
        assert g.length("a") == 1.0
        assert np.allclose(g.direction("a"), [1, 0, 0])
        assert np.allclose(g.midpoint("a"), [0.5, 0, 0])
