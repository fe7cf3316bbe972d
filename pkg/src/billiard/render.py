"""Text rendering of the triangular grid, apex at the top."""

from __future__ import annotations

from typing import Callable

from .simplex import Location


def location_label(loc: Location) -> str:
    if max(loc) < 10:
        return f"{loc.r}{loc.s}{loc.t}"
    return f"{loc.r},{loc.s},{loc.t}"


def triangle_rows(d: int, cell: Callable[[Location], str] = location_label) -> list[list[str]]:
    return [[cell(Location(k - t, d - k, t)) for t in range(k + 1)] for k in range(d + 1)]


def render_triangle(d: int, cell: Callable[[Location], str] = location_label, gap: int = 2) -> str:
    """Rows are centered; every cell is padded to the widest one."""
    rows = triangle_rows(d, cell)
    width = max(len(c) for row in rows for c in row)
    lines = [(" " * gap).join(c.center(width) for c in row) for row in rows]
    full = len(lines[-1])
    return "\n".join(line.center(full).rstrip() for line in lines)
