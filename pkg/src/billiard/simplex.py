"""Combinatorics of the triangular grid of triples (r, s, t) with r + s + t = d.

The grid is drawn with (0, d, 0) at the apex and row k holding the
locations with s = d - k; within a row t increases left to right. The
bottom row (s = 0) runs from (d, 0, 0) to (0, 0, d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

AXES = ("R", "S", "T")
BLACK = "black"
WHITE = "white"


class Location(NamedTuple):
    r: int
    s: int
    t: int

    @property
    def diameter(self) -> int:
        return self.r + self.s + self.t

    def coord(self, axis: str) -> int:
        return self[AXES.index(axis)]

    def __str__(self) -> str:
        return f"({self.r},{self.s},{self.t})"


def is_location(loc, d: int) -> bool:
    return len(loc) == 3 and all(isinstance(x, int) and x >= 0 for x in loc) and sum(loc) == d


def locations(d: int) -> list[Location]:
    """All locations of the diameter-d grid, apex first, each row left to right."""
    if d < 0:
        raise ValueError("diameter must be nonnegative")
    return [Location(d - s - t, s, t) for s in range(d, -1, -1) for t in range(d - s + 1)]


def adjacent(a: Location, b: Location) -> bool:
    """Adjacent means two coordinates differ by exactly one (the third then agrees)."""
    diffs = sorted(abs(x - y) for x, y in zip(a, b))
    return diffs == [0, 1, 1]


def neighbors(loc: Location) -> list[Location]:
    out = []
    for i in range(3):
        for j in range(3):
            if i != j:
                c = list(loc)
                c[i] += 1
                c[j] -= 1
                if c[j] >= 0:
                    out.append(Location(*c))
    return sorted(out)


@dataclass(frozen=True)
class Line:
    axis: str
    value: int
    members: tuple[Location, ...]


def line(d: int, axis: str, k: int) -> Line:
    """The maximal line where coordinate ``axis`` equals ``k``, members sorted by (r, t)."""
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}")
    if not 0 <= k <= d:
        raise ValueError(f"line value {k} outside [0, {d}]")
    members = sorted((loc for loc in locations(d) if loc.coord(axis) == k), key=lambda x: (x.r, x.t))
    return Line(axis, k, tuple(members))


def maximal_lines(d: int) -> list[Line]:
    return [line(d, axis, k) for axis in AXES for k in range(d + 1)]


@dataclass(frozen=True)
class Clique:
    color: str
    members: tuple[Location, Location, Location]

    def to_json(self) -> dict:
        return {"color": self.color, "members": [list(m) for m in self.members]}


def black_clique(base: Location) -> Clique:
    """The black clique (r,s,t), (r+1,s-1,t), (r,s-1,t+1); needs s >= 1."""
    r, s, t = base
    if s < 1:
        raise ValueError(f"black clique base {base} needs s >= 1")
    return Clique(BLACK, (base, Location(r + 1, s - 1, t), Location(r, s - 1, t + 1)))


def black_cliques(d: int) -> list[Clique]:
    return [black_clique(loc) for loc in locations(d) if loc.s >= 1]


def white_clique(loc: Location) -> Clique:
    """White clique of the diameter-(d+2) grid attached to ``loc`` in the diameter-d grid.

    Members are listed clockwise in the drawn triangle:
    (r+1,s+1,t) -> (r,s+1,t+1) -> (r+1,s,t+1).
    """
    r, s, t = loc
    return Clique(WHITE, (Location(r + 1, s + 1, t), Location(r, s + 1, t + 1), Location(r + 1, s, t + 1)))


def white_cliques(d: int) -> list[tuple[Location, Clique]]:
    if d < 2:
        return []
    return [(loc, white_clique(loc)) for loc in locations(d - 2)]


def edges(d: int) -> list[tuple[Location, Location]]:
    """Unordered edges, each listed once as (a, b) with a < b."""
    return sorted({tuple(sorted((a, b))) for a in locations(d) for b in neighbors(a)})
