"""Leonard systems, their split decompositions, and how the polynomial-type
array built from A sits on them.

A Leonard system is supplied, never discovered: the caller gives A, A* and
orderings of both spectra, and ``verify_leonard_system`` certifies the
axioms exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionError,
    FieldMismatchError,
    LeonardSystemError,
    NotMultiplicityFreeError,
    QRacahError,
    SeedError,
)
from .field import FieldSpec, Scalar
from .linalg import EigStructure, Matrix, Vector, check_distinct, in_span, poly_apply, primitive_idempotents, rank_of, same_span
from .polycba import PolyCBA, bottom_border_check, build_poly_cba, eta_roots
from .report import Report
from .simplex import Location, is_location


@dataclass(frozen=True)
class LeonardSystem:
    eig: EigStructure
    eig_star: EigStructure

    @property
    def a(self) -> Matrix:
        return self.eig.matrix

    @property
    def a_star(self) -> Matrix:
        return self.eig_star.matrix

    @property
    def d(self) -> int:
        return self.eig.d

    @property
    def field(self) -> FieldSpec:
        return self.eig.field

    @property
    def theta(self) -> tuple[Scalar, ...]:
        return self.eig.eigenvalues

    @property
    def theta_star(self) -> tuple[Scalar, ...]:
        return self.eig_star.eigenvalues

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "A": self.a.to_json(),
            "theta": [str(x) for x in self.theta],
            "Astar": self.a_star.to_json(),
            "theta_star": [str(x) for x in self.theta_star],
        }


def _first_band_violation(e: Sequence[Matrix], other: Matrix) -> tuple[int, int, bool] | None:
    """First (i, j, product_is_zero) where ``e[i] other e[j]`` breaks the band pattern."""
    n = len(e)
    for i in range(n):
        left = e[i] @ other
        for j in range(n):
            zero = (left @ e[j]).is_zero()
            if (abs(i - j) > 1 and not zero) or (abs(i - j) == 1 and zero):
                return i, j, zero
    return None


def _band_failure(eig: EigStructure, eig_star: EigStructure) -> LeonardSystemError | None:
    for cond, (e, m, tag, mtag) in {
        "E A* E": (eig.idempotents, eig_star.matrix, "E", "A*"),
        "E* A E*": (eig_star.idempotents, eig.matrix, "E*", "A"),
    }.items():
        bad = _first_band_violation(e, m)
        if bad:
            i, j, zero = bad
            how = "= 0 although |i-j| = 1" if zero else "!= 0 although |i-j| > 1"
            return LeonardSystemError(cond, f"{tag}_{i} {mtag} {tag}_{j} {how}", (i, j))
    return None


def verify_leonard_system(a: Matrix, theta: Sequence, a_star: Matrix, theta_star: Sequence) -> LeonardSystem:
    """Certify (A; E_i; A*; E*_i) as a Leonard system or raise LeonardSystemError
    naming the first violated condition."""
    if a.field != a_star.field:
        raise FieldMismatchError(f"A is over {a.field}, A* over {a_star.field}")
    if a.shape != a_star.shape:
        raise DimensionError(f"A is {a.shape}, A* is {a_star.shape}")
    eigs = []
    for name, m, th in (("A", a, theta), ("A*", a_star, theta_star)):
        try:
            eigs.append(primitive_idempotents(m, th))
        except NotMultiplicityFreeError as exc:
            raise LeonardSystemError("multiplicity-free", f"{name}: {exc}") from exc
    err = _band_failure(*eigs)
    if err is not None:
        raise err
    return LeonardSystem(*eigs)


def leonard_report(a: Matrix, theta: Sequence, a_star: Matrix, theta_star: Sequence) -> tuple[Report, LeonardSystem | None]:
    """Like ``verify_leonard_system`` but returns a report instead of raising."""
    rep = Report("leonard system axioms")
    try:
        ls = verify_leonard_system(a, theta, a_star, theta_star)
    except LeonardSystemError as exc:
        subject = f"(i,j)={exc.pair}" if exc.pair else "-"
        rep.add(exc.condition, subject, False, str(exc))
        return rep, None
    rep.add("multiplicity-free", "A, A*", True)
    rep.add("E A* E", "tridiagonal, irreducible", True)
    rep.add("E* A E*", "tridiagonal, irreducible", True)
    return rep, ls


def downarrow(ls: LeonardSystem) -> LeonardSystem:
    """Reverse the ordering of the E_i, keep A, A* and the E*_i."""
    out = LeonardSystem(ls.eig.reversed(), ls.eig_star)
    err = _band_failure(out.eig, out.eig_star)
    if err is not None:  # pragma: no cover - impossible for a verified input
        raise RuntimeError(f"reversed system failed re-verification: {err}")
    return out


def _eigenspace_spanner(e: Matrix) -> Vector:
    return next(c for c in e.columns() if not c.is_zero())


def standard_seed(ls: LeonardSystem) -> Vector:
    """First nonzero column of E*_0."""
    return _eigenspace_spanner(ls.eig_star.idempotents[0])


@dataclass(frozen=True)
class SplitDecomposition:
    """U_0..U_d, each given by one spanning vector."""

    spanners: tuple[Vector, ...]

    def __getitem__(self, i: int) -> Vector:
        return self.spanners[i]

    def __len__(self) -> int:
        return len(self.spanners)

    def to_json(self) -> list[list[str]]:
        return [u.to_json() for u in self.spanners]


def split_decomposition(ls: LeonardSystem, v: Vector | None = None) -> SplitDecomposition:
    """U_i spanned by eta_i(A) v for nonzero v in E*_0 V."""
    v = standard_seed(ls) if v is None else v
    spanners = tuple(poly_apply(ls.a, eta_roots(ls.theta, i), v) for i in range(ls.d + 1))
    for i, u in enumerate(spanners):
        if u.is_zero():
            raise LeonardSystemError("split", f"eta_{i}(A) v = 0: U_{i} would not be one-dimensional")
    return SplitDecomposition(spanners)


def split_report(ls: LeonardSystem, split: SplitDecomposition | None = None) -> Report:
    """Cross-check the product description of U_i against the intersection
    description and the two partial-sum identities."""
    split = split_decomposition(ls) if split is None else split
    d = ls.d
    e = [_eigenspace_spanner(x) for x in ls.eig.idempotents]
    es = [_eigenspace_spanner(x) for x in ls.eig_star.idempotents]
    u = list(split.spanners)
    rep = Report("split decomposition")
    for i in range(d + 1):
        rep.add("dim-one", f"U_{i}", rank_of([u[i]]) == 1)
    k = rank_of(u)
    rep.add("direct-sum", "U_0 + ... + U_d", k == d + 1, f"rank {k} of {d + 1}")
    for i in range(d + 1):
        ok = in_span(u[i], es[: i + 1]) and in_span(u[i], e[: d - i + 1])
        rep.add("intersection", f"U_{i} in (E*_0V+..+E*_{i}V) & (E_0V+..+E_{d - i}V)", ok)
    for i in range(d + 1):
        rep.add("partial-sum-star", f"U_0+..+U_{i} = E*_0V+..+E*_{i}V", same_span(u[: i + 1], es[: i + 1]))
        rep.add("partial-sum", f"U_{i}+..+U_{d} = E_0V+..+E_{d - i}V", same_span(u[i:], e[: d - i + 1]))
    rep.add("ends", "U_0 = E*_0V", same_span([u[0]], [es[0]]))
    rep.add("ends", f"U_{d} = E_0V", same_span([u[d]], [e[0]]))
    return rep


def leonard_cba(ls: LeonardSystem, v: Vector | None = None) -> PolyCBA:
    """The polynomial-type array of A seeded by v in E*_0 V (raises SeedError)."""
    v = standard_seed(ls) if v is None else v
    return build_poly_cba(ls.eig, v)


def border_correspondence(ls: LeonardSystem, v: Vector | None = None) -> Report:
    """Left border in the split decomposition, right border in the reversed
    system's split decomposition, bottom border in the eigenspaces of A."""
    v = standard_seed(ls) if v is None else v
    rep = Report("border correspondence")
    rep.add("seed-in-E*0V", "v", not v.is_zero() and in_span(v, [standard_seed(ls)]))
    try:
        cba = leonard_cba(ls, v)
    except SeedError as exc:
        rep.add("seed-generic", f"E_{exc.index} v", False, "E_i v = 0 for v in E*_0V contradicts the Leonard axioms")
        return rep
    rep.add("seed-generic", "E_i v != 0 for all i", True)
    d = ls.d
    up = split_decomposition(ls, v)
    down = split_decomposition(downarrow(ls), v)
    for i in range(d + 1):
        loc = Location(i, d - i, 0)
        x = cba.array[loc]
        rep.add("left-border", f"{loc} in U_{i}", not x.is_zero() and in_span(x, [up[i]]))
    for i in range(d + 1):
        loc = Location(0, d - i, i)
        x = cba.array[loc]
        rep.add("right-border", f"{loc} in U^down_{i}", not x.is_zero() and in_span(x, [down[i]]))
    return rep.extend(bottom_border_check(cba))


# -- q-Racah -----------------------------------------------------------------


@dataclass(frozen=True)
class QRacahParams:
    """Parameters of theta_i = a + b q^i + c q^{-i}, 0 <= i <= d.

    Construction rejects b = 0, c = 0, q in {0, 1, -1} and parameter choices
    whose theta_i collide.
    """

    q: Scalar
    a: Scalar
    b: Scalar
    c: Scalar
    d: int

    def __post_init__(self) -> None:
        fields = {x.field for x in (self.q, self.a, self.b, self.c)}
        if len(fields) != 1:
            raise FieldMismatchError("q, a, b, c must share a field")
        if not isinstance(self.d, int) or self.d < 0:
            raise QRacahError(f"diameter must be a nonnegative integer, got {self.d!r}")
        if self.b.is_zero() or self.c.is_zero():
            raise QRacahError("b and c must be nonzero")
        if self.q.is_zero() or self.q == 1 or self.q == -1:
            raise QRacahError(f"q = {self.q} is not allowed (q must avoid 0, 1, -1)")
        check_distinct(self.eigenvalues())

    @classmethod
    def parse(cls, obj: dict, field: FieldSpec) -> QRacahParams:
        return cls(*(field.element(str(obj[k])) for k in "qabc"), int(obj["d"]))

    @property
    def field(self) -> FieldSpec:
        return self.q.field

    def eigenvalues(self) -> tuple[Scalar, ...]:
        return tuple(self.a + self.b * self.q**i + self.c * self.q ** (-i) for i in range(self.d + 1))

    def to_json(self) -> dict:
        return {"q": str(self.q), "a": str(self.a), "b": str(self.b), "c": str(self.c), "d": self.d}


def qracah_eigenvalues(p: QRacahParams) -> tuple[Scalar, ...]:
    theta = p.eigenvalues()
    check_distinct(theta)
    return theta


def qracah_value(p: QRacahParams, loc) -> Scalar:
    """q (b q^{d+t-r-1} - c) / (b q^{d+t-r+1} - c) at (r, s, t) of diameter d-2."""
    if not is_location(tuple(loc), p.d - 2):
        raise ValueError(f"{tuple(loc)} is not a location of diameter {p.d - 2}")
    r, _, t = loc
    e = p.d + t - r
    den = p.b * p.q ** (e + 1) - p.c
    if den.is_zero():
        raise QRacahError(f"zero denominator at {tuple(loc)}")
    return p.q * (p.b * p.q ** (e - 1) - p.c) / den

