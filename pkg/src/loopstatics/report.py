"""Analysis reports: counts, cycle basis, statics summary, resultant tables.

Reports are plain dicts rendered to deterministic JSON; the counting
identities (cycle count = e - v + 1 and s - m = e - 3v + 6) are asserted
at build time so an inconsistent report can never be emitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .chains import FrameGraph
from .cycles import FundamentalCycle, SpanningTree, fundamental_cycles, spanning_tree
from .errors import StateError
from .selfstress import (
    SelfStressState,
    all_bar_resultants,
    check_axial,
    residual_at_node,
    selfstress_dimension,
)
from .statics import StaticsSummary, analyze_statics

REPORT_FORMAT = "frame-report/1"

CONVENTIONS = {
    "axial_sign": "tension-positive",
    "resultant_face": "positive cut face; the bar direction exits the cut",
    "incidence_sign": "+1 into a node, -1 out",
    "moment_reference": "global origin",
}


@dataclass(frozen=True)
class AnalysisReport:
    counts: dict
    tree: dict
    cycles: list
    statics: dict
    bar_resultants: list = field(default_factory=list)
    node_residuals: list = field(default_factory=list)
    axial_check: list = field(default_factory=list)

    def __post_init__(self):
        c = self.counts
        if c["cycles"] != c["e"] - c["v"] + 1:
            raise StateError("report inconsistency: cycle count != e - v + 1")
        if c["selfstress_dimension"] != 6 * c["cycles"]:
            raise StateError("report inconsistency: welded dimension != 6(e - v + 1)")
        s, m = self.statics.get("s"), self.statics.get("m")
        if s is not None and m is not None:
            if s - m != c["e"] - 3 * c["v"] + 6:
                raise StateError("report inconsistency: s - m != e - 3v + 6")

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "conventions": CONVENTIONS,
            "counts": self.counts,
            "tree": self.tree,
            "cycles": self.cycles,
            "statics": self.statics,
            "bar_resultants": self.bar_resultants,
            "node_residuals": self.node_residuals,
            "axial_check": self.axial_check,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        c = self.counts
        lines = [
            f"nodes {c['v']}  bars {c['e']}  basis loops {c['cycles']}  "
            f"welded self-stress dimension {c['selfstress_dimension']}",
        ]
        if self.statics:
            st = self.statics
            lines.append(
                f"axial statics: s={st['s']} m={st['m']} rank={st['rank']} "
                f"sigma_min={st['sigma_min']}"
            )
        lines.append(f"tree root {self.tree['root']!r}, edges: "
                     + " ".join(str(e) for e in self.tree['edges']))
        for cyc in self.cycles:
            terms = " ".join(f"{c:+d}*{e}" for e, c in cyc["chain"])
            lines.append(f"loop {cyc['generator']}: {terms}")
        for row in self.bar_resultants:
            f = row["force"]
            lines.append(
                f"bar {row['bar']}: axial {row['axial_force']:+.6g}  "
                f"force ({f[0]:.6g}, {f[1]:.6g}, {f[2]:.6g})"
            )
        for row in self.axial_check:
            lines.append(f"axial check {row['bar']}: "
                         + ("pass" if row["is_axial"] else "FAIL"))
        return "\n".join(lines) + "\n"


def _chain_rows(cycle: FundamentalCycle) -> list:
    return [[e, c] for e, c in sorted(cycle.chain.items(), key=lambda kv: str(kv[0]))]


def _vec(v) -> list:
    return [float(x) for x in np.asarray(v)]


def build_report(
    graph: FrameGraph,
    tree: SpanningTree | None = None,
    basis: list | None = None,
    summary: StaticsSummary | None = None,
    state: SelfStressState | None = None,
    rtol: float = 1e-9,
    with_statics: bool = True,
    axial_tol: float = 1e-9,
) -> AnalysisReport:
    """Assemble a report; missing pieces are computed on demand."""
    if tree is None:
        tree = spanning_tree(graph)
    if basis is None:
        basis = fundamental_cycles(graph, tree)
    statics: dict = {}
    if with_statics:
        if summary is None:
            summary = analyze_statics(graph, rtol=rtol)
        statics = {
            "s": summary.s,
            "m": summary.m,
            "rank": summary.rank,
            "sigma_min": summary.sigma_min,
            "selfstress_basis": [
                [[e, float(q[e])] for e in graph.edge_ids]
                for q in summary.selfstress_basis
            ],
        }
    counts = {
        "v": graph.v,
        "e": graph.e,
        "cycles": len(basis),
        "selfstress_dimension": selfstress_dimension(graph),
    }
    bar_rows: list = []
    node_rows: list = []
    axial_rows: list = []
    if state is not None:
        state.require_complete(basis)
        resultants = all_bar_resultants(state, basis, graph)
        for bar in graph.edge_ids:
            res = resultants[bar]
            axial = float(res.force @ graph.direction(bar))
            bar_rows.append(
                {
                    "bar": bar,
                    "force": _vec(res.force),
                    "total_moment": _vec(res.total_moment),
                    "axial_force": axial,
                }
            )
        for node in graph.node_ids:
            f_res, m_res = residual_at_node(resultants, node, graph)
            node_rows.append(
                {"node": node, "force": _vec(f_res), "moment": _vec(m_res)}
            )
        for bar, chk in check_axial(state, graph, basis, tol=axial_tol).items():
            axial_rows.append(
                {
                    "bar": bar,
                    "is_axial": chk.is_axial,
                    "force_parallel": chk.force_parallel,
                    "moment_matches": chk.moment_matches,
                    "axial_force": chk.axial_force,
                }
            )
    return AnalysisReport(
        counts=counts,
        tree={
            "root": tree.root,
            "edges": sorted(tree.edge_ids, key=str),
        },
        cycles=[
            {"generator": c.generator, "chain": _chain_rows(c)} for c in basis
        ],
        statics=statics,
        bar_resultants=bar_rows,
        node_residuals=node_rows,
        axial_check=axial_rows,
    )
