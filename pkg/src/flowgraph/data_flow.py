"""Def-use (dfNext) edges.

The main solver works backwards from uses: each flow instruction records the
pending uses that still need a definition when control arrives there. A
pending use travels against cfNext edges until it meets a node defining its
variable, where it becomes a dfNext edge from that node to the use.

Two independent formulations are kept next to it for cross-checking:
classic forward reaching definitions, and a per-definition path search.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .structure import FlowGraph

Edge = tuple[int, int]


class PendingUse(NamedTuple):
    use: int
    var: str


@dataclass
class DataFlowState:
    ins: dict[int, frozenset[PendingUse]] = field(default_factory=dict)
    outs: dict[int, frozenset[PendingUse]] = field(default_factory=dict)
    edges: set[Edge] = field(default_factory=set)
    iterations: int = 0


def _reverse_postorder_backward(graph: FlowGraph, preds: dict[int, set[int]]) -> list[int]:
    """Reverse post-order of the reversed CFG, rooted at Exit."""
    seen: set[int] = set()
    order: list[int] = []

    def visit(root: int) -> None:
        stack = [(root, iter(sorted(preds[root])))]
        seen.add(root)
        while stack:
            node, it = stack[-1]
            nxt = next((p for p in it if p not in seen), None)
            if nxt is None:
                stack.pop()
                order.append(node)
            else:
                seen.add(nxt)
                stack.append((nxt, iter(sorted(preds[nxt]))))

    visit(graph.exit)
    order.reverse()
    flow = [n.id for n in graph.flow_nodes()]
    # Nodes that cannot reach Exit still need a visit.
    for n in reversed(flow):
        if n not in seen:
            rest: list[int] = []
            stack = [n]
            seen.add(n)
            while stack:
                x = stack.pop()
                rest.append(x)
                for p in sorted(preds[x]):
                    if p not in seen:
                        seen.add(p)
                        stack.append(p)
            order.extend(rest)
    return order


def solve_needed_definitions(graph: FlowGraph, order: Optional[Sequence[int]] = None) -> DataFlowState:
    """Run the backward worklist to a fixpoint.

    ``order`` overrides the initial worklist order; the fixpoint does not
    depend on it.
    """
    preds = graph.predecessors()
    flow_ids = [n.id for n in graph.flow_nodes()]
    if order is None:
        order = _reverse_postorder_backward(graph, preds)
    gen = {n: frozenset(PendingUse(n, v) for v in graph.uses.get(n, ())) for n in flow_ids}
    defs = {n: graph.defs.get(n, frozenset()) for n in flow_ids}

    state = DataFlowState()
    ins = {n: frozenset() for n in flow_ids}

    def out_of(n: int) -> frozenset[PendingUse]:
        return frozenset().union(*(ins[m] for m in graph[n].cf_next))

    worklist = deque(order)
    queued = set(order)
    while worklist:
        n = worklist.popleft()
        queued.discard(n)
        state.iterations += 1
        new_in = gen[n] | {p for p in out_of(n) if p.var not in defs[n]}
        if new_in != ins[n]:
            assert new_in >= ins[n], "In sets must grow monotonically"
            ins[n] = frozenset(new_in)
            for p in preds[n]:
                if p not in queued:
                    queued.add(p)
                    worklist.append(p)

    state.ins = ins
    state.outs = {n: out_of(n) for n in flow_ids}
    for n in flow_ids:
        for p in state.outs[n]:
            if p.var in defs[n]:
                state.edges.add((n, p.use))
    return state


def df_edges(graph: FlowGraph) -> set[Edge]:
    return solve_needed_definitions(graph).edges


def assign_df_edges(graph: FlowGraph, edges: set[Edge]) -> FlowGraph:
    for node in graph.nodes:
        node.df_next = set()
    for d, u in edges:
        graph[d].df_next.add(u)
    return graph


def compute_df_edges(graph: FlowGraph) -> FlowGraph:
    """Replace the graph's dfNext sets using the backward solver."""
    return assign_df_edges(graph, df_edges(graph))


def forward_rd_oracle(graph: FlowGraph) -> set[Edge]:
    """Def-use edges from classic forward reaching definitions."""
    flow_ids = [n.id for n in graph.flow_nodes()]
    preds = graph.predecessors()
    defs = {n: graph.defs.get(n, frozenset()) for n in flow_ids}
    gen = {n: {(n, v) for v in defs[n]} for n in flow_ids}

    rd_in: dict[int, set[tuple[int, str]]] = {n: set() for n in flow_ids}
    rd_out: dict[int, set[tuple[int, str]]] = {n: set(gen[n]) for n in flow_ids}
    changed = True
    while changed:
        changed = False
        for n in flow_ids:
            rd_in[n] = set().union(*(rd_out[p] for p in preds[n]))
            new_out = gen[n] | {(d, v) for d, v in rd_in[n] if v not in defs[n]}
            if new_out != rd_out[n]:
                rd_out[n] = new_out
                changed = True

    return {(d, u) for u in flow_ids for d, v in rd_in[u] if v in graph.uses.get(u, ())}


def path_oracle(graph: FlowGraph) -> set[Edge]:
    """Def-use edges by searching forward from every definition."""
    edges: set[Edge] = set()
    for d in graph.flow_nodes():
        for v in graph.defs.get(d.id, ()):
            seen: set[int] = set()
            queue = deque(d.cf_next)
            while queue:
                x = queue.popleft()
                if x in seen:
                    continue
                seen.add(x)
                if v in graph.uses.get(x, ()):
                    edges.add((d.id, x))
                if v not in graph.defs.get(x, ()):
                    queue.extend(graph[x].cf_next)
    return edges


ORACLES = {"rd": forward_rd_oracle, "path": path_oracle}
