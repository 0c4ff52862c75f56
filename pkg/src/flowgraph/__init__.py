"""Control-flow and data-flow graphs for a small Java subset."""
from .control_flow import compute_cf_edges, flow_entry, structural_successor
from .data_flow import compute_df_edges, forward_rd_oracle, path_oracle
from .errors import BindError, FlowgraphError, LexError, ParseError, SpecParseError
from .flowspec import parse_spec, render_report, validate
from .lexer import tokenize
from .parser import parse, parse_source
from .pipeline import analyze
from .printer import get_text
from .structure import FlowGraph, FlowNode, FlowNodeKind, VarInfo, build_graph, populate_var_table

__all__ = [
    "BindError", "FlowGraph", "FlowNode", "FlowNodeKind", "FlowgraphError", "LexError",
    "ParseError", "SpecParseError", "VarInfo", "analyze", "build_graph", "compute_cf_edges",
    "compute_df_edges", "flow_entry", "forward_rd_oracle", "get_text", "parse", "parse_source",
    "parse_spec", "path_oracle", "populate_var_table", "render_report", "structural_successor",
    "tokenize", "validate",
]
