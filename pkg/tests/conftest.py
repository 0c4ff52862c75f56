import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
CORPUS = sorted((FIXTURES / "corpus").glob("*.java"))

sys.path.insert(0, str(TESTS))

from flowgraph import analyze  # noqa: E402


def corpus_graphs(stage="pdg"):
    """(file stem, graph) for every method in the corpus."""
    out = []
    for path in CORPUS:
        for g in analyze(path.read_text(), stage):
            out.append((path.stem, g))
    return out


def method_graph(body, params="", stage="pdg"):
    """Analyze a single method ``m`` with the given body text."""
    src = f"class T {{ int m({params}) {{ {body} }} }}"
    return analyze(src, stage)[0]


def txt_edges(graph, kind="cf"):
    edges = graph.cf_edges() if kind == "cf" else graph.df_edges()
    return {(graph[a].txt, graph[b].txt) for a, b in edges}


def node(graph, txt):
    matches = graph.find(txt)
    assert len(matches) == 1, f"{txt!r} matches {len(matches)} nodes"
    return matches[0].id


@pytest.fixture(scope="session")
def corpus():
    return corpus_graphs()


# -- acceptance summary ----------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {title}")
