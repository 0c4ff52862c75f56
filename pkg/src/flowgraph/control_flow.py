"""Control-flow (cfNext) edges over a structure graph.

Only flow instructions (Method, Exit, SimpleStmt, Return, Break, Continue and
condition Expr nodes) carry edges. Block, If, Loop and Label nodes are
transparent: entering one means entering its first flow instruction, and
leaving it means continuing at its structural successor.
"""
from __future__ import annotations

from .errors import InternalError
from .structure import FlowGraph, FlowNodeKind as K


def flow_entry(graph: FlowGraph, node_id: int) -> int:
    """The first flow instruction executed when control enters ``node_id``."""
    node = graph[node_id]
    if node.kind in (K.IF, K.LOOP):
        return node.expr
    if node.kind == K.LABEL:
        return flow_entry(graph, node.body[0])
    if node.kind == K.BLOCK:
        if node.body:
            return flow_entry(graph, node.body[0])
        return structural_successor(graph, node_id)
    return node_id


def structural_successor(graph: FlowGraph, node_id: int) -> int:
    """Where control goes after ``node_id`` completes normally."""
    node = graph[node_id]
    parent = graph[node.parent]
    if parent.kind in (K.METHOD, K.BLOCK):
        idx = parent.body.index(node_id)
        if idx + 1 < len(parent.body):
            return flow_entry(graph, parent.body[idx + 1])
        if parent.kind == K.METHOD:
            return graph.exit
        return structural_successor(graph, parent.id)
    if parent.kind == K.LOOP:
        return parent.expr  # back edge
    if parent.kind in (K.IF, K.LABEL):
        return structural_successor(graph, parent.id)
    raise InternalError(f"node {node_id} has no statement parent")


def cf_successors(graph: FlowGraph) -> dict[int, set[int]]:
    edges: dict[int, set[int]] = {n.id: set() for n in graph.nodes}
    for node in graph.nodes:
        out = edges[node.id]
        if node.kind == K.METHOD:
            out.add(flow_entry(graph, node.body[0]) if node.body else graph.exit)
        elif node.kind == K.SIMPLE_STMT:
            out.add(structural_successor(graph, node.id))
        elif node.kind == K.RETURN:
            out.add(graph.exit)
        elif node.kind == K.EXPR:
            owner = graph[node.parent]
            if owner.kind == K.IF:
                out.add(flow_entry(graph, owner.then[0]))
                if owner.orelse:
                    out.add(flow_entry(graph, owner.orelse[0]))
                else:
                    out.add(structural_successor(graph, owner.id))
            else:
                out.add(flow_entry(graph, owner.body[0]))
                out.add(structural_successor(graph, owner.id))
        elif node.kind in (K.BREAK, K.CONTINUE):
            if node.target is None:
                raise InternalError(f"unresolved jump target for {node.txt!r}")
            if node.kind == K.BREAK:
                out.add(structural_successor(graph, node.target))
            else:
                out.add(graph[node.target].expr)
    return edges


def compute_cf_edges(graph: FlowGraph) -> FlowGraph:
    """Replace the graph's cfNext sets with freshly computed ones."""
    for node_id, succ in cf_successors(graph).items():
        graph[node_id].cf_next = succ
    return graph
