"""States of self-stress expressed as one resultant bivector per basis loop.

Assigning any six-component resultant to every basis loop defines a valid
self-stress: the resultant carried across a cut on any bar is the signed
sum of the resultants of the loops that bar belongs to, and node balance
then holds identically because every basis loop has zero boundary.

Sign conventions
----------------
* The resultant acts on the positive cut face of a bar, the face the
  bar's own direction exits; a fundamental cycle traverses its generator
  in the bar direction, matching this choice.
* Node incidence sign: +1 for a bar directed into the node, -1 out.
* The axial scalar is force dotted with the bar direction, so tension is
  positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .chains import EdgeId, FrameGraph, NodeId
from .cycles import FundamentalCycle, cycle_membership
from .errors import StateError, StructureError
from .wedge import ZERO_BIVECTOR, Bivector6, force_of, moment_of


@dataclass(frozen=True)
class SelfStressState:
    """Map from cycle id (generator bar id) to the loop's resultant."""

    resultants: Mapping  # cycle id -> Bivector6

    def resultant(self, cycle_id) -> Bivector6:
        try:
            return self.resultants[cycle_id]
        except KeyError:
            raise StateError(f"state has no resultant for cycle {cycle_id!r}") from None

    def require_complete(self, basis: list[FundamentalCycle]) -> None:
        missing = [c.generator for c in basis if c.generator not in self.resultants]
        if missing:
            raise StateError(
                "state is missing resultants for cycles: "
                + ", ".join(repr(m) for m in missing)
            )

    def __add__(self, other: "SelfStressState") -> "SelfStressState":
        keys = set(self.resultants) | set(other.resultants)
        return SelfStressState(
            {
                k: self.resultants.get(k, ZERO_BIVECTOR)
                + other.resultants.get(k, ZERO_BIVECTOR)
                for k in keys
            }
        )

    def __mul__(self, k: float) -> "SelfStressState":
        return SelfStressState({c: k * b for c, b in self.resultants.items()})

    __rmul__ = __mul__

    @classmethod
    def zero(cls, basis: list[FundamentalCycle]) -> "SelfStressState":
        return cls({c.generator: ZERO_BIVECTOR for c in basis})


@dataclass(frozen=True, eq=False)
class BarResultant:
    """Force and total moment (about the origin) on a bar's positive cut face."""

    bar: EdgeId
    bivector: Bivector6
    force: np.ndarray
    total_moment: np.ndarray


def bar_resultant(
    state: SelfStressState,
    bar: EdgeId,
    basis: list[FundamentalCycle],
    graph: FrameGraph,
) -> BarResultant:
    """Signed sum of the resultants of every basis loop containing the bar."""
    total = ZERO_BIVECTOR
    for cycle_id, coeff in cycle_membership(bar, basis, graph):
        total = total + coeff * state.resultant(cycle_id)
    return BarResultant(
        bar=bar, bivector=total, force=force_of(total), total_moment=moment_of(total)
    )


def all_bar_resultants(
    state: SelfStressState, basis: list[FundamentalCycle], graph: FrameGraph
) -> dict:
    state.require_complete(basis)
    return {bar: bar_resultant(state, bar, basis, graph) for bar in graph.edge_ids}


def incidence_sign(graph: FrameGraph, bar: EdgeId, node: NodeId) -> int:
    """+1 if the bar is directed into the node, -1 if out of it."""
    tail, head = graph.ends(bar)
    if node == head:
        return 1
    if node == tail:
        return -1
    raise StructureError(f"bar {bar!r} is not incident to node {node!r}")


def residual_at_node(
    resultants: Mapping, node: NodeId, graph: FrameGraph
) -> tuple[np.ndarray, np.ndarray]:
    """Signed force and moment sums at a node for given per-bar resultants.

    Both vanish for any resultant map produced by chain summation; the
    entry point exists so tests can feed deliberately corrupted maps.
    """
    f_res = np.zeros(3)
    m_res = np.zeros(3)
    for bar in graph.incident_edges(node):
        sign = incidence_sign(graph, bar, node)
        res = resultants[bar]
        f_res += sign * res.force
        m_res += sign * res.total_moment
    return f_res, m_res


def node_residual(
    state: SelfStressState,
    node: NodeId,
    graph: FrameGraph,
    basis: list[FundamentalCycle],
) -> tuple[np.ndarray, np.ndarray]:
    """Equilibrium residual at one node; zero (to rounding) for every state."""
    if not graph.has_node(node):
        raise StructureError(f"unknown node {node!r}")
    incident = {
        bar: bar_resultant(state, bar, basis, graph)
        for bar in graph.incident_edges(node)
    }
    return residual_at_node(incident, node, graph)


@dataclass(frozen=True)
class AxialCheck:
    """Per-bar verdict: force along the bar and no internal bending/torsion."""

    bar: EdgeId
    force_parallel: bool
    moment_matches: bool
    axial_force: float  # tension-positive

    @property
    def is_axial(self) -> bool:
        return self.force_parallel and self.moment_matches


def check_axial(
    state: SelfStressState,
    graph: FrameGraph,
    basis: list[FundamentalCycle],
    tol: float = 1e-9,
) -> dict:
    """Axial test for every bar.

    A bar passes when (1) its force is parallel to the bar within tol and
    (2) its total moment equals midpoint x force within tol, i.e. the
    internal bending and torsional moments vanish.
    """
    state.require_complete(basis)
    report = {}
    for bar in graph.edge_ids:
        u = graph.direction(bar)  # raises on zero-length bars
        res = bar_resultant(state, bar, basis, graph)
        f, m = res.force, res.total_moment
        f_norm = float(np.linalg.norm(f))
        axial = float(f @ u)
        perp = f - axial * u
        force_parallel = float(np.linalg.norm(perp)) <= tol * f_norm
        r = graph.midpoint(bar)
        lever = np.cross(r, f)
        m_scale = max(
            float(np.linalg.norm(m)), float(np.linalg.norm(r)) * f_norm
        )
        moment_matches = float(np.linalg.norm(m - lever)) <= tol * m_scale
        report[bar] = AxialCheck(
            bar=bar,
            force_parallel=force_parallel,
            moment_matches=moment_matches,
            axial_force=axial,
        )
    return report


def selfstress_dimension(graph: FrameGraph) -> int:
    """Independent self-stress count of the fully welded frame: six per
    basis loop."""
    return 6 * (graph.e - graph.v + 1)
