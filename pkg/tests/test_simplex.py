import pytest
from oracles import brute_adjacent, brute_locations, brute_triangles

from billiard.render import render_triangle, triangle_rows
from billiard.simplex import (
    BLACK,
    WHITE,
    Location,
    adjacent,
    black_cliques,
    edges,
    line,
    locations,
    maximal_lines,
    neighbors,
    white_cliques,
)


def test_locations_small():
    assert locations(0) == [(0, 0, 0)]
    assert len(locations(3)) == 10
    assert locations(3)[:4] == [(0, 3, 0), (1, 2, 0), (0, 2, 1), (2, 1, 0)]


@pytest.mark.parametrize("d", range(8))
def test_locations_complete(d):
    locs = locations(d)
    assert len(locs) == (d + 1) * (d + 2) // 2
    assert sorted(locs) == sorted(brute_locations(d))


def test_picture_rows_d3():
    # apex row first, as drawn: 030 / 120 021 / 210 111 012 / 300 201 102 003
    rows = triangle_rows(3)
    assert rows == [["030"], ["120", "021"], ["210", "111", "012"], ["300", "201", "102", "003"]]
    text = render_triangle(3)
    assert [ln.split() for ln in text.splitlines()] == rows


def test_lines():
    assert line(2, "R", 2).members == ((2, 0, 0),)
    assert line(2, "S", 0).members == ((0, 0, 2), (1, 0, 1), (2, 0, 0))
    assert set(line(2, "S", 0).members) == {(2, 0, 0), (1, 0, 1), (0, 0, 2)}
    assert len(maximal_lines(1)) == 6
    with pytest.raises(ValueError):
        line(2, "Q", 0)
    with pytest.raises(ValueError):
        line(2, "R", 3)


@pytest.mark.parametrize("d", range(7))
def test_each_location_on_three_lines(d):
    lns = maximal_lines(d)
    assert len(lns) == 3 * (d + 1)
    for ln in lns:
        assert len(ln.members) == d - ln.value + 1
        assert list(ln.members) == sorted(ln.members, key=lambda x: (x.r, x.t))
    for loc in locations(d):
        assert sum(loc in ln.members for ln in lns) == 3


def test_black_cliques_small():
    assert black_cliques(0) == []
    (only,) = black_cliques(1)
    assert set(only.members) == {(0, 1, 0), (1, 0, 0), (0, 0, 1)}
    assert len(black_cliques(2)) == 3


def test_white_cliques_small():
    assert white_cliques(1) == []
    [(base, cl)] = white_cliques(2)
    assert base == (0, 0, 0)
    assert set(cl.members) == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}
    assert len(white_cliques(3)) == 3


@pytest.mark.parametrize("d", range(7))
def test_clique_partition_matches_brute_force(d):
    triangles = set(brute_triangles(d))
    black = [frozenset(c.members) for c in black_cliques(d)]
    white = [frozenset(c.members) for _, c in white_cliques(d)]
    assert len(black) == len(set(black)) == d * (d + 1) // 2
    assert len(white) == len(set(white)) == max(d - 1, 0) * d // 2
    assert not set(black) & set(white)
    assert set(black) | set(white) == triangles
    for c in black_cliques(d) + [c for _, c in white_cliques(d)]:
        a, b, e = c.members
        assert brute_adjacent(a, b) and brute_adjacent(b, e) and brute_adjacent(a, e)
    assert all(c.color == BLACK for c in black_cliques(d))
    assert all(c.color == WHITE for _, c in white_cliques(d))


@pytest.mark.parametrize("d", range(1, 7))
def test_every_edge_in_exactly_one_black_clique(d):
    count = {e: 0 for e in edges(d)}
    for c in black_cliques(d):
        a, b, e = c.members
        for pair in ((a, b), (b, e), (a, e)):
            count[tuple(sorted(pair))] += 1
    assert set(count.values()) == {1}


@pytest.mark.parametrize("d", range(7))
def test_adjacency_symmetric_and_bounded(d):
    locs = locations(d)
    for a in locs:
        nb = neighbors(a)
        assert len(nb) <= 6
        assert set(nb) == {b for b in locs if brute_adjacent(a, b)}
        for b in locs:
            assert adjacent(a, b) == adjacent(b, a) == brute_adjacent(a, b)


def test_white_clique_is_clockwise_in_picture():
    # lam top-left, mu top-right, nu below: (r+1,s+1,t), (r,s+1,t+1), (r+1,s,t+1)
    [(_, cl)] = white_cliques(2)
    lam, mu, nu = cl.members
    assert (lam, mu, nu) == (Location(1, 1, 0), Location(0, 1, 1), Location(1, 0, 1))
    assert lam.s == mu.s and lam.t < mu.t
    assert nu.s == lam.s - 1
