"""End-to-end analysis: source text to per-method graphs."""
from __future__ import annotations

from typing import Optional

from .control_flow import compute_cf_edges
from .data_flow import ORACLES, assign_df_edges, compute_df_edges
from .parser import parse_source
from .structure import FlowGraph, build_graphs

STAGES = ("structure", "cfg", "pdg")


def analyze(source: str, stage: str = "pdg", oracle: Optional[str] = None) -> list[FlowGraph]:
    """Run the pipeline up to ``stage``.

    With ``oracle`` set ("rd" or "path"), dfNext edges come from that
    reference computation instead of the backward solver.
    """
    if stage not in STAGES:
        raise ValueError(f"unknown stage {stage!r}")
    graphs = build_graphs(parse_source(source))
    if stage == "structure":
        return graphs
    for g in graphs:
        compute_cf_edges(g)
    if stage == "cfg":
        return graphs
    for g in graphs:
        if oracle is None:
            compute_df_edges(g)
        else:
            assign_df_edges(g, ORACLES[oracle](g))
    return graphs
