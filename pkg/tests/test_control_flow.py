import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from flowgraph import analyze
from flowgraph.control_flow import compute_cf_edges, flow_entry, structural_successor
from flowgraph.structure import CONTAINER_KINDS, FlowNodeKind as K

from conftest import corpus_graphs, method_graph, node, txt_edges
from program_gen import random_program
from trace_oracle import run


def cfg(body, params=""):
    return method_graph(body, params, stage="cfg")


def test_return_only():
    g = cfg("return;")
    assert txt_edges(g) == {("m()", "return;"), ("return;", "Exit")}


def test_while_then_statement():
    g = cfg("while (i < n) i++; r = i;", "int i, int n, int r")
    assert txt_edges(g) == {
        ("m(int i, int n, int r)", "i < n"),
        ("i < n", "i++;"),
        ("i < n", "r = i;"),
        ("i++;", "i < n"),
        ("r = i;", "Exit"),
    }


def test_labeled_break_leaves_labeled_loop():
    g = cfg("a: while (x) { break a; }", "boolean x")
    brk = g[node(g, "break a;")]
    assert brk.cf_next == {g.exit}
    assert brk.cf_next == {structural_successor(g, node(g, "a:"))}


def test_labeled_break_from_inner_loop():
    g = cfg("o: while (x) { while (y) { break o; } z = 1; } z = 2;", "boolean x, boolean y, int z")
    assert g[node(g, "break o;")].cf_next == {node(g, "z = 2;")}


def test_flow_entry_cases():
    g = cfg("int a = 0; {} a = 1; while (a < 2) a++; l: while (true) {} if (a > 0) {}")
    loop = g.find("while (a < 2)")[0].id
    assert flow_entry(g, loop) == node(g, "a < 2")
    simple = node(g, "a = 1;")
    assert flow_entry(g, simple) == simple
    empty_block = g.find("{...}")[0].id
    assert flow_entry(g, empty_block) == simple
    assert flow_entry(g, node(g, "l:")) == node(g, "true")
    assert flow_entry(g, g.find("if (a > 0)")[0].id) == node(g, "a > 0")


def test_structural_successor_cases():
    g = cfg("while (c) { a = 1; b = 2; } if (c) { a = 3; } else { b = 4; } r = a;", "boolean c, int a, int b, int r")
    loop_cond = g[g.find("while (c)")[0].id].expr
    assert structural_successor(g, node(g, "b = 2;")) == loop_cond
    then_last = node(g, "a = 3;")
    assert structural_successor(g, then_last) == node(g, "r = a;")
    assert structural_successor(g, node(g, "r = a;")) == g.exit


def test_sole_statement_goes_to_exit():
    g = cfg("x = 1;", "int x")
    assert structural_successor(g, node(g, "x = 1;")) == g.exit


def test_diamond_full_edge_set():
    g = cfg("int a; if (c) a = 1; else a = 2; int r = a;", "boolean c")
    assert txt_edges(g) == {
        ("m(boolean c)", "int a;"),
        ("int a;", "c"),
        ("c", "a = 1;"),
        ("c", "a = 2;"),
        ("a = 1;", "int r = a;"),
        ("a = 2;", "int r = a;"),
        ("int r = a;", "Exit"),
    }


def test_if_without_else_edges_to_successor():
    g = cfg("if (c) x = 1; x = 2;", "boolean c, int x")
    assert g[node(g, "c")].cf_next == {node(g, "x = 1;"), node(g, "x = 2;")}


def test_empty_then_branch_collapses_condition_successors():
    g = cfg("if (c) {} x = 2;", "boolean c, int x")
    assert g[node(g, "c")].cf_next == {node(g, "x = 2;")}


def test_empty_loop_body_self_edge():
    g = cfg("while (c) {}", "boolean c")
    c = node(g, "c")
    assert g[c].cf_next == {c, g.exit}


def test_infinite_loop_keeps_exit_edge():
    g = cfg("while (true) x++;", "int x")
    assert g[node(g, "true")].cf_next == {node(g, "x++;"), g.exit}


def test_continue_targets_condition():
    g = cfg("o: while (a) { while (b) { continue o; } continue; }", "boolean a, boolean b")
    assert g[node(g, "continue o;")].cf_next == {node(g, "a")}
    assert g[node(g, "continue;")].cf_next == {node(g, "a")}


def test_unreachable_code_keeps_structural_edges():
    g = cfg("return 1; x = 2; x = 3;", "int x")
    assert g[node(g, "x = 2;")].cf_next == {node(g, "x = 3;")}
    assert g[node(g, "x = 3;")].cf_next == {g.exit}
    assert g[node(g, "return 1;")].cf_next == {g.exit}


def test_recompute_replaces_edges():
    g = cfg("x = 1;", "int x")
    before = g.cf_edges()
    g[2].cf_next.add(0)
    compute_cf_edges(g)
    assert g.cf_edges() == before


# -- invariants ------------------------------------------------------------------


def check_cf_invariants(g):
    for n in g.nodes:
        succ = n.cf_next
        if n.kind == K.EXIT:
            assert succ == set()
        elif n.kind in CONTAINER_KINDS:
            assert succ == set()
        else:
            assert len(succ) >= 1, n.txt
        if n.kind == K.RETURN:
            assert succ == {g.exit}
        if n.kind in (K.RETURN, K.BREAK, K.CONTINUE):
            assert len(succ) == 1
        if n.kind == K.EXPR:
            assert len(succ) in (1, 2)
        for m in succ:
            assert g[m].is_flow


def check_determinism(g):
    before = g.cf_edges()
    compute_cf_edges(g)
    assert g.cf_edges() == before


def check_loop_free_reaches_exit(g):
    if any(n.kind == K.LOOP for n in g.nodes):
        return
    reach = {}
    for n in g.flow_nodes():
        seen, stack = {n.id}, [n.id]
        while stack:
            for m in g[stack.pop()].cf_next:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        reach[n.id] = seen
    for nid in reach[g.entry]:
        assert g.exit in reach[nid]


def check_traces(g, rng, runs=6):
    nparams = len(g[g.entry].ast.params)
    for _ in range(runs):
        args = [rng.randint(-3, 6) for _ in range(nparams)]
        trace, _ = run(g, args)
        assert trace[0] == g.entry
        for a, b in itertools.pairwise(trace):
            assert b in g[a].cf_next, (g[a].txt, g[b].txt)


def test_corpus_invariants(corpus):
    rng = random.Random(7)
    for _, g in corpus:
        check_cf_invariants(g)
        check_determinism(g)
        check_loop_free_reaches_exit(g)
        check_traces(g, rng)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_random_invariants(seed):
    g = method_graph_from(random_program(seed))
    check_cf_invariants(g)
    check_determinism(g)
    check_loop_free_reaches_exit(g)
    check_traces(g, random.Random(seed))


def method_graph_from(src):
    return analyze(src, "cfg")[0]


def test_trace_oracle_exercises_loops():
    g = cfg("int i = 0; while (i < n) { if (i == 2) { i += 2; continue; } i++; } return i;", "int n")
    trace, done = run(g, [5])
    assert done
    assert [g[t].txt for t in trace[:4]] == ["m(int n)", "int i = 0;", "i < n", "i == 2"]
    assert trace.count(node(g, "i < n")) == 5
