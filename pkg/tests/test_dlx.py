from starcode.dlx import DancingLinks


# Knuth's six-row exact cover example; columns A..G are 0..6
KNUTH_ROWS = [
    (0, [2, 4, 5]),
    (1, [0, 3, 6]),
    (2, [1, 2, 5]),
    (3, [0, 3]),
    (4, [1, 6]),
    (5, [3, 4, 6]),
]


def test_unique_cover():
    dlx = DancingLinks(7, KNUTH_ROWS)
    assert dlx.first_branch() == (0, [1, 3])
    assert dlx.solve() == [[0, 3, 4]]
    assert dlx.complete
    assert dlx.nodes > 0


def test_enumeration_order_and_limit():
    rows = [(0, [0, 1]), (1, [0]), (2, [1])]
    assert DancingLinks(2, rows).solve() == [[0], [1, 2]]
    dlx = DancingLinks(2, rows)
    assert dlx.solve(limit=1) == [[0]]
    assert not dlx.complete


def test_degenerate_instances():
    assert DancingLinks(0, []).solve() == [[]]
    assert DancingLinks(0, []).first_branch() == (None, [])
    dlx = DancingLinks(1, [])
    assert dlx.solve() == []
    assert dlx.complete


def test_search_restores_links():
    dlx = DancingLinks(7, KNUTH_ROWS)
    before = (list(dlx.L), list(dlx.R), list(dlx.U), list(dlx.D), list(dlx.S))
    dlx.solve()
    assert (dlx.L, dlx.R, dlx.U, dlx.D, dlx.S) == before
