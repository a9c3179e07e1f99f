import pytest

from chromroots.enumerate import canonical_form, connected_corpus, connected_graphs, graphs_of_order
from chromroots.graph import complete_bipartite, cycle, petersen
from chromroots.io import read_graph6_file

from .conftest import DATA


@pytest.mark.parametrize("n,total,connected", [(1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21), (6, 156, 112)])
def test_class_counts(n, total, connected):
    assert len(graphs_of_order(n)) == total
    assert len(connected_graphs(n)) == connected


def test_canonical_form_is_label_invariant():
    g = petersen()
    for perm in ([3, 1, 4, 0, 5, 9, 2, 6, 8, 7], list(range(10))[::-1]):
        assert canonical_form(g.relabel(perm).adj) == canonical_form(g.adj)
    assert canonical_form(complete_bipartite(2, 2).adj) == canonical_form(cycle(4).adj)
    assert canonical_form(cycle(6).adj) != canonical_form(complete_bipartite(2, 4).adj)


def test_bundled_corpora_match_generator():
    for n in range(1, 7):
        got = {canonical_form(g.adj) for g in read_graph6_file(DATA / f"connected{n}.g6")}
        assert got == {canonical_form(g.adj) for g in connected_graphs(n)}


def test_corpus_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CHROMROOTS_CORPUS_DIR", str(tmp_path))
    p = connected_corpus(4)
    assert p.parent == tmp_path and len(read_graph6_file(p)) == 6
    with pytest.raises(FileNotFoundError):
        connected_corpus(5, generate=False)
