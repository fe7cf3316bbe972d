"""Concrete Billiard Arrays of polynomial type.

Given a multiplicity-free A with ordered spectrum theta_0..theta_d and a seed
v whose every eigencomponent is nonzero, the array sends (r, s, t) to

    eta_r(A) tau_t(A) v,

where tau_k has roots theta_0..theta_{k-1} and eta_k has roots
theta_d..theta_{d-k+1}. Its edge labels have closed forms in the theta's,
and so does its value function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import DimensionError, InconsistentLabelError, ParseError, SeedError
from .field import FieldSpec, Scalar
from .linalg import EigStructure, Matrix, Vector, poly_apply, primitive_idempotents, rank_of
from .report import Report
from .simplex import Location, black_cliques, is_location, locations, maximal_lines, white_clique, white_cliques

# -- the two polynomial families --------------------------------------------


def tau_roots(theta: Sequence[Scalar], k: int) -> list[Scalar]:
    return list(theta[:k])


def eta_roots(theta: Sequence[Scalar], k: int) -> list[Scalar]:
    d = len(theta) - 1
    return [theta[d - i + 1] for i in range(1, k + 1)]


def _evaluate(roots: Sequence[Scalar], x: Scalar) -> Scalar:
    out = x.field.one
    for r in roots:
        out = out * (x - r)
    return out


def tau_eval(theta: Sequence[Scalar], k: int, x: Scalar) -> Scalar:
    return _evaluate(tau_roots(theta, k), x)


def eta_eval(theta: Sequence[Scalar], k: int, x: Scalar) -> Scalar:
    return _evaluate(eta_roots(theta, k), x)


# -- the array ---------------------------------------------------------------


@dataclass
class PolyCBA:
    """The array plus what it was built from.

    ``eig`` and ``seed`` are None for an array loaded from a file that did not
    carry the matrix; only the line/clique axioms can be checked then.
    """

    d: int
    field: FieldSpec
    theta: tuple[Scalar, ...]
    array: dict[Location, Vector]
    eig: EigStructure | None = None
    seed: Vector | None = None
    seed_parts: tuple[Vector, ...] = field(default=())

    def __getitem__(self, loc) -> Vector:
        return self.array[Location(*loc)]

    @property
    def matrix(self) -> Matrix:
        if self.eig is None:
            raise ParseError("this array was loaded without its matrix A")
        return self.eig.matrix

    def replaced(self, loc, vec: Vector) -> PolyCBA:
        """Copy with one vector swapped out (used for negative tests)."""
        array = dict(self.array)
        array[Location(*loc)] = vec
        return PolyCBA(self.d, self.field, self.theta, array, self.eig, self.seed, self.seed_parts)

    def scaled(self, c) -> PolyCBA:
        return build_poly_cba(self.eig, self.seed * c)

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "field": self.field.to_json(),
            "theta": [str(x) for x in self.theta],
            "array": [{"loc": list(loc), "vec": self.array[loc].to_json()} for loc in locations(self.d)],
        }
        if self.eig is not None:
            out["A"] = self.eig.matrix.to_json()
        if self.seed is not None:
            out["seed"] = self.seed.to_json()
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> PolyCBA:
        try:
            fld = FieldSpec.from_json(obj["field"])
            d = int(obj["d"])
            theta = tuple(fld.parse(x) for x in obj["theta"])
            array = {}
            for entry in obj["array"]:
                loc = tuple(entry["loc"])
                if not is_location(loc, d):
                    raise ParseError(f"{loc} is not a location of diameter {d}")
                array[Location(*loc)] = Vector([fld.parse(x) for x in entry["vec"]], fld)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed array file: {exc}") from None
        if len(theta) != d + 1:
            raise ParseError(f"expected {d + 1} eigenvalues, got {len(theta)}")
        missing = set(locations(d)) - set(array)
        if missing:
            raise ParseError(f"array is missing locations {sorted(missing)}")
        if any(len(v) != d + 1 for v in array.values()):
            raise ParseError(f"array vectors must have length {d + 1}")
        eig = seed = None
        parts: tuple[Vector, ...] = ()
        if "A" in obj:
            a = Matrix([[fld.parse(x) for x in row] for row in obj["A"]], fld)
            eig = primitive_idempotents(a, theta)
        if "seed" in obj:
            seed = Vector([fld.parse(x) for x in obj["seed"]], fld)
            if eig is not None:
                parts = tuple(e @ seed for e in eig.idempotents)
        return cls(d, fld, theta, array, eig, seed, parts)


def build_poly_cba(eig: EigStructure, v: Vector | None = None) -> PolyCBA:
    """Construct the polynomial-type array of ``eig`` seeded by ``v``.

    Without ``v`` the seed is the sum of the first nonzero column of each E_i.
    """
    if v is None:
        v = eig.seed_vector()
    a = eig.matrix
    if len(v) != a.shape[0]:
        raise DimensionError(f"seed has length {len(v)}, matrix is {a.shape[0]}x{a.shape[0]}")
    if v.field != eig.field:
        raise DimensionError(f"seed lives in {v.field}, matrix in {eig.field}")
    parts = tuple(e @ v for e in eig.idempotents)
    for i, p in enumerate(parts):
        if p.is_zero():
            raise SeedError(i)
    theta = eig.eigenvalues
    d = eig.d
    array = {
        loc: poly_apply(a, eta_roots(theta, loc.r) + tau_roots(theta, loc.t), v)
        for loc in locations(d)
    }
    return PolyCBA(d, eig.field, theta, array, eig, v, parts)


# -- verification ------------------------------------------------------------


def verify_cba(cba: PolyCBA) -> Report:
    """Check the two Concrete Billiard Array axioms.

    Each maximal line must be linearly independent. Each black clique must
    span exactly a plane: dependent as a triple, independent in pairs.
    """
    rep = Report("concrete billiard array axioms")
    for ln in maximal_lines(cba.d):
        k = rank_of([cba.array[m] for m in ln.members])
        rep.add("line-independent", f"{ln.axis}={ln.value}", k == len(ln.members), f"rank {k} of {len(ln.members)}")
    for cl in black_cliques(cba.d):
        vecs = [cba.array[m] for m in cl.members]
        k = rank_of(vecs)
        pair_ranks = [rank_of([vecs[i], vecs[j]]) for i, j in ((0, 1), (1, 2), (2, 0))]
        ok = k == 2 and pair_ranks == [2, 2, 2]
        rep.add("black-clique-dependent", _clique_name(cl.members), ok, f"rank {k}; pair ranks {pair_ranks}")
    return rep


def _clique_name(members) -> str:
    return " ".join(str(m) for m in members)


def black_clique_relation_check(cba: PolyCBA) -> Report:
    """On each black clique lam=(r,s,t), mu=(r+1,s-1,t), nu=(r,s-1,t+1) check

        L_mu = (A - theta_{d-r}) L_lam,  L_nu = (A - theta_t) L_lam,
        L_lam = (L_mu - L_nu) / (theta_t - theta_{d-r}).
    """
    rep = Report("black clique relations")
    a = cba.matrix
    th, d = cba.theta, cba.d
    for cl in black_cliques(d):
        lam, mu, nu = cl.members
        r, _, t = lam
        L = cba.array
        ok_mu = L[mu] == a.shift(th[d - r]) @ L[lam]
        ok_nu = L[nu] == a.shift(th[t]) @ L[lam]
        ok_lam = L[lam] == (L[mu] - L[nu]) / (th[t] - th[d - r])
        rep.add("clique-relation", _clique_name(cl.members), ok_mu and ok_nu and ok_lam,
                f"mu {ok_mu}, nu {ok_nu}, lambda {ok_lam}")
    return rep


def bottom_border_check(cba: PolyCBA) -> Report:
    """L_{(d-i,0,i)} is a nonzero theta_i-eigenvector of A."""
    rep = Report("bottom border in eigenspaces")
    a = cba.matrix
    for i in range(cba.d + 1):
        loc = Location(cba.d - i, 0, i)
        x = cba.array[loc]
        ok = not x.is_zero() and a @ x == x * cba.theta[i]
        rep.add("bottom-border", f"{loc} in E_{i}V", ok)
    return rep


def vanishing_check(theta: Sequence[Scalar]) -> Report:
    """tau_j(theta_i) = 0 iff i < j, and eta_j(theta_i) = 0 iff i > d - j."""
    rep = Report("tau/eta vanishing pattern")
    d = len(theta) - 1
    for i in range(d + 1):
        for j in range(d + 1):
            tz = tau_eval(theta, j, theta[i]).is_zero()
            ez = eta_eval(theta, j, theta[i]).is_zero()
            rep.add("tau-vanishing", f"i={i} j={j}", tz == (i < j))
            rep.add("eta-vanishing", f"i={i} j={j}", ez == (i > d - j))
    return rep


def projection_check(cba: PolyCBA) -> Report:
    """E_i tau_j(A) v = tau_j(theta_i) v_i and the same for eta_j."""
    rep = Report("eigenprojections of tau_j(A)v and eta_j(A)v")
    eig, v, th = cba.eig, cba.seed, cba.theta
    if eig is None or v is None:
        raise ParseError("projection check needs the matrix and the seed")
    a = eig.matrix
    d = cba.d
    for j in range(d + 1):
        tv = poly_apply(a, tau_roots(th, j), v)
        ev = poly_apply(a, eta_roots(th, j), v)
        for i in range(d + 1):
            e, vi = eig.idempotents[i], cba.seed_parts[i]
            rep.add("tau-projection", f"i={i} j={j}", e @ tv == vi * tau_eval(th, j, th[i]))
            rep.add("eta-projection", f"i={i} j={j}", e @ ev == vi * eta_eval(th, j, th[i]))
    return rep


# -- edge labels and value functions ------------------------------------------


@dataclass
class EdgeLabeling:
    d: int
    labels: dict[tuple[Location, Location], Scalar]

    def __getitem__(self, pair) -> Scalar:
        a, b = pair
        return self.labels[(Location(*a), Location(*b))]

    def __len__(self) -> int:
        return len(self.labels)

    def to_json(self) -> list[dict]:
        return [{"from": list(a), "to": list(b), "label": str(x)} for (a, b), x in sorted(self.labels.items())]


def _clique_labels(theta: Sequence[Scalar], base: Location) -> dict:
    """Labels on the black clique at ``base``, both orientations of each side.

    Going lam -> mu -> nu: 1/(theta_{d-r} - theta_t), -1, theta_t - theta_{d-r}.
    (This is the sign choice that satisfies the three-term dependency
    L_lam + b(lam,mu) L_mu + b(lam,nu) L_nu = 0.)
    """
    d = len(theta) - 1
    r, s, t = base
    lam, mu, nu = base, Location(r + 1, s - 1, t), Location(r, s - 1, t + 1)
    gap = theta[d - r] - theta[t]
    one = gap.field.one
    fwd = {(lam, mu): one / gap, (mu, nu): -one, (nu, lam): -gap}
    out = dict(fwd)
    for (x, y), val in fwd.items():
        out[(y, x)] = val.inverse()
    return out


def edge_labels(cba: PolyCBA) -> EdgeLabeling:
    """Label every ordered edge from the black clique(s) containing it.

    An edge seen by several cliques must get the same label from each;
    disagreement raises InconsistentLabelError.
    """
    labels: dict[tuple[Location, Location], Scalar] = {}
    for cl in black_cliques(cba.d):
        for edge, val in _clique_labels(cba.theta, cl.members[0]).items():
            old = labels.setdefault(edge, val)
            if old != val:
                raise InconsistentLabelError(f"edge {edge[0]}->{edge[1]}: {old} vs {val}")
    return EdgeLabeling(cba.d, labels)


def edge_label_check(cba: PolyCBA, labels: EdgeLabeling) -> Report:
    """Edge labeling axioms plus the dependency relation on every black clique."""
    rep = Report("edge labeling")
    for (a, b), x in sorted(labels.labels.items()):
        if a < b:
            back = labels.labels.get((b, a))
            rep.add("reciprocal", f"{a}<->{b}", not x.is_zero() and back is not None and x * back == 1)
    L = cba.array
    for cl in black_cliques(cba.d):
        lam, mu, nu = cl.members
        prod = labels[lam, mu] * labels[mu, nu] * labels[nu, lam]
        rep.add("black-product-one", _clique_name(cl.members), prod == 1, f"product {prod}")
        # the dependency must hold with each member in the leading role
        ok = all(
            (L[x] + L[y] * labels[x, y] + L[z] * labels[x, z]).is_zero()
            for x, y, z in ((lam, mu, nu), (mu, nu, lam), (nu, lam, mu))
        )
        rep.add("dependency", _clique_name(cl.members), ok)
    return rep


@dataclass
class ValueFunction:
    """Values indexed by the diameter-(d-2) grid."""

    d: int
    values: dict[Location, Scalar]

    def __getitem__(self, loc) -> Scalar:
        return self.values[Location(*loc)]

    def to_json(self) -> list[dict]:
        return [{"loc": list(loc), "value": str(x)} for loc, x in sorted(self.values.items())]


def clockwise_value(labels: EdgeLabeling, loc: Location) -> Scalar:
    lam, mu, nu = white_clique(loc).members
    return labels[lam, mu] * labels[mu, nu] * labels[nu, lam]


def counterclockwise_value(labels: EdgeLabeling, loc: Location) -> Scalar:
    lam, mu, nu = white_clique(loc).members
    return labels[lam, nu] * labels[nu, mu] * labels[mu, lam]


def value_function(labels: EdgeLabeling) -> ValueFunction:
    values = {}
    for loc, _ in white_cliques(labels.d):
        x = clockwise_value(labels, loc)
        if x.is_zero():
            raise InconsistentLabelError(f"zero value at {loc}")
        values[loc] = x
    return ValueFunction(labels.d, values)


def closed_form_value(theta: Sequence[Scalar], loc) -> Scalar:
    """(theta_{d-r-1} - theta_t) / (theta_{d-r} - theta_{t+1}) at (r,s,t) of diameter d-2."""
    d = len(theta) - 1
    if not is_location(tuple(loc), d - 2):
        raise ValueError(f"{tuple(loc)} is not a location of diameter {d - 2}")
    r, _, t = loc
    return (theta[d - r - 1] - theta[t]) / (theta[d - r] - theta[t + 1])


def closed_form_values(theta: Sequence[Scalar]) -> ValueFunction:
    d = len(theta) - 1
    return ValueFunction(d, {loc: closed_form_value(theta, loc) for loc in locations(d - 2)} if d >= 2 else {})


def value_function_check(cba: PolyCBA) -> Report:
    rep = Report("value function vs closed form")
    vf = value_function(edge_labels(cba))
    for loc, x in sorted(vf.values.items()):
        y = closed_form_value(cba.theta, loc)
        rep.add("value", str(loc), x == y, f"{x} vs {y}")
    return rep
