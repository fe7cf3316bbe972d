"""Bundled inputs: the Krawtchouk Leonard pair, the small diagonal example,
and random generators used by the test and acceptance suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import BilliardError
from .field import QQ, FieldSpec
from .leonard import QRacahParams
from .linalg import EigStructure, Matrix, Vector, primitive_idempotents, rank


def krawtchouk(d: int, field: FieldSpec = QQ) -> tuple[Matrix, list, Matrix, list]:
    """(A, theta, A*, theta*) with A tridiagonal (subdiagonal 1..d, superdiagonal
    d..1, zero diagonal), A* = diag(d - 2i), theta_i = theta*_i = d - 2i."""
    n = d + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(d):
        rows[i + 1][i] = i + 1
        rows[i][i + 1] = d - i
    theta = [field(d - 2 * i) for i in range(n)]
    return Matrix(rows, field), theta, Matrix.diag(theta, field), list(theta)


def diagonal_example(field: FieldSpec = QQ) -> tuple[EigStructure, Vector]:
    """A = diag(0, 1, 2) with theta = (0, 1, 2) and seed (1, 1, 1)."""
    theta = [field(0), field(1), field(2)]
    return primitive_idempotents(Matrix.diag(theta, field), theta), Vector([1, 1, 1], field)


def random_invertible(rng: random.Random, n: int, field: FieldSpec = QQ, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        m = Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], field)
        if rank(m) == n:
            return m


def random_multiplicity_free(
    rng: random.Random, d: int, field: FieldSpec = QQ, spread: int = 20
) -> EigStructure:
    """P diag(theta) P^-1 for a random distinct integer spectrum in [-spread, spread]."""
    theta = [field(x) for x in rng.sample(range(-spread, spread + 1), d + 1)]
    p = random_invertible(rng, d + 1, field)
    a = p @ Matrix.diag(theta, field) @ p.inverse()
    return primitive_idempotents(a, theta)


def random_seed(rng: random.Random, eig: EigStructure) -> Vector:
    """Sum of random nonzero multiples of one spanning column per eigenspace."""
    total = Vector.zeros(eig.matrix.shape[0], eig.field)
    for e in eig.idempotents:
        col = next(c for c in e.columns() if not c.is_zero())
        c = 0
        while c == 0:
            c = rng.randint(-5, 5)
        total = total + col * c
    return total


def _random_rational(rng: random.Random, bound: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x or not nonzero:
            return x


def random_qracah(rng: random.Random, d_min: int = 2, d_max: int = 8) -> QRacahParams:
    """Random valid q-Racah parameters over the rationals; invalid draws are resampled."""
    while True:
        q = _random_rational(rng, nonzero=True)
        if q in (1, -1):
            continue
        a = _random_rational(rng)
        b = _random_rational(rng, nonzero=True)
        c = _random_rational(rng, nonzero=True)
        try:
            return QRacahParams(QQ(q), QQ(a), QQ(b), QQ(c), rng.randint(d_min, d_max))
        except BilliardError:
            continue
