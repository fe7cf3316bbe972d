"""Dense exact vectors and matrices.

Entries are held as raw field values (``Fraction`` or residues) and handed
out as ``Scalar`` on access. Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, DuplicateEigenvalueError, FieldMismatchError, NotMultiplicityFreeError
from .field import PRIME, QQ, FieldSpec, Scalar


def _check_same_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatchError(f"cannot combine {a} and {b} objects")


def _coerce_scalar(c, field: FieldSpec):
    """Return the raw value of ``c`` in ``field``, or None if ``c`` is not a scalar."""
    if isinstance(c, Scalar):
        _check_same_field(c.field, field)
        return c.value
    if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
        return field.raw(c)
    return None


class Vector:
    __slots__ = ("_raw", "field")

    def __init__(self, entries: Iterable, field: FieldSpec = QQ) -> None:
        self.field = field
        self._raw = tuple(field.element(x).value for x in entries)

    @classmethod
    def _from_raw(cls, raw, field: FieldSpec) -> Vector:
        obj = object.__new__(cls)
        obj.field = field
        if field.kind == PRIME:
            p = field.modulus
            obj._raw = tuple(x % p for x in raw)
        else:
            obj._raw = tuple(raw)
        return obj

    @classmethod
    def zeros(cls, n: int, field: FieldSpec = QQ) -> Vector:
        return cls._from_raw([field.raw(0)] * n, field)

    @classmethod
    def unit(cls, n: int, i: int, field: FieldSpec = QQ) -> Vector:
        return cls._from_raw([field.raw(int(k == i)) for k in range(n)], field)

    @property
    def raw(self) -> tuple:
        return self._raw

    def __len__(self) -> int:
        return len(self._raw)

    def __getitem__(self, i: int) -> Scalar:
        return Scalar._make(self._raw[i], self.field)

    def __iter__(self):
        f = self.field
        return (Scalar._make(x, f) for x in self._raw)

    def _other(self, other: Vector) -> tuple:
        _check_same_field(self.field, other.field)
        if len(other) != len(self):
            raise DimensionError(f"vector lengths differ: {len(self)} vs {len(other)}")
        return other._raw

    def __add__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        return Vector._from_raw([x + y for x, y in zip(self._raw, self._other(other))], self.field)

    def __sub__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        return Vector._from_raw([x - y for x, y in zip(self._raw, self._other(other))], self.field)

    def __neg__(self) -> Vector:
        return Vector._from_raw([-x for x in self._raw], self.field)

    def __mul__(self, c) -> Vector:
        c = _coerce_scalar(c, self.field)
        if c is None:
            return NotImplemented
        return Vector._from_raw([c * x for x in self._raw], self.field)

    __rmul__ = __mul__

    def __truediv__(self, c) -> Vector:
        c = _coerce_scalar(c, self.field)
        if c is None:
            return NotImplemented
        return self * Scalar._make(c, self.field).inverse()

    def is_zero(self) -> bool:
        return not any(self._raw)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self._raw == other._raw

    def __hash__(self) -> int:
        return hash((self._raw, self.field))

    def __repr__(self) -> str:
        return "Vector([" + ", ".join(str(x) for x in self._raw) + "])"

    def to_json(self) -> list[str]:
        return [str(x) for x in self._raw]


class Matrix:
    __slots__ = ("_raw", "field", "shape")

    def __init__(self, rows: Iterable[Iterable], field: FieldSpec = QQ) -> None:
        raw = tuple(tuple(field.element(x).value for x in row) for row in rows)
        widths = {len(r) for r in raw}
        if len(widths) > 1:
            raise DimensionError("ragged matrix rows")
        self.field = field
        self._raw = raw
        self.shape = (len(raw), widths.pop() if widths else 0)

    @classmethod
    def _from_raw(cls, raw, field: FieldSpec, ncols: int | None = None) -> Matrix:
        obj = object.__new__(cls)
        obj.field = field
        if field.kind == PRIME:
            p = field.modulus
            obj._raw = tuple(tuple(x % p for x in row) for row in raw)
        else:
            obj._raw = tuple(tuple(row) for row in raw)
        obj.shape = (len(obj._raw), len(obj._raw[0]) if obj._raw else (ncols or 0))
        return obj

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> Matrix:
        one, zero = field.raw(1), field.raw(0)
        return cls._from_raw([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, n: int, m: int | None = None, field: FieldSpec = QQ) -> Matrix:
        m = n if m is None else m
        zero = field.raw(0)
        return cls._from_raw([[zero] * m for _ in range(n)], field, m)

    @classmethod
    def diag(cls, entries: Sequence, field: FieldSpec = QQ) -> Matrix:
        vals = [field.element(x).value for x in entries]
        zero = field.raw(0)
        n = len(vals)
        return cls._from_raw([[vals[i] if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], field: FieldSpec | None = None) -> Matrix:
        if not columns:
            return cls._from_raw([], field or QQ)
        field = field or columns[0].field
        for c in columns:
            _check_same_field(c.field, field)
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise DimensionError("columns of unequal length")
        return cls._from_raw(list(zip(*(c.raw for c in columns))), field)

    @property
    def raw(self) -> tuple:
        return self._raw

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return Scalar._make(self._raw[i][j], self.field)

    def rows(self) -> list[list[Scalar]]:
        f = self.field
        return [[Scalar._make(x, f) for x in row] for row in self._raw]

    def row(self, i: int) -> Vector:
        return Vector._from_raw(self._raw[i], self.field)

    def column(self, j: int) -> Vector:
        return Vector._from_raw([row[j] for row in self._raw], self.field)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.shape[1])]

    def transpose(self) -> Matrix:
        return Matrix._from_raw(list(zip(*self._raw)), self.field, self.shape[0])

    def _same_shape(self, other: Matrix) -> None:
        _check_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix._from_raw(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._raw, other._raw)], self.field, self.shape[1]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_shape(other)
        return Matrix._from_raw(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self._raw, other._raw)], self.field, self.shape[1]
        )

    def __neg__(self) -> Matrix:
        return Matrix._from_raw([[-x for x in r] for r in self._raw], self.field, self.shape[1])

    def __mul__(self, c) -> Matrix:
        c = _coerce_scalar(c, self.field)
        if c is None:
            return NotImplemented
        return Matrix._from_raw([[c * x for x in r] for r in self._raw], self.field, self.shape[1])

    __rmul__ = __mul__

    def __truediv__(self, c) -> Matrix:
        c = _coerce_scalar(c, self.field)
        if c is None:
            return NotImplemented
        return self * Scalar._make(c, self.field).inverse()

    def __matmul__(self, other):
        if isinstance(other, Vector):
            _check_same_field(self.field, other.field)
            if self.shape[1] != len(other):
                raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(other)} vector")
            v = other._raw
            return Vector._from_raw([sum(a * b for a, b in zip(row, v)) for row in self._raw], self.field)
        if isinstance(other, Matrix):
            _check_same_field(self.field, other.field)
            if self.shape[1] != other.shape[0]:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = list(zip(*other._raw))
            return Matrix._from_raw(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._raw],
                self.field,
                other.shape[1],
            )
        return NotImplemented

    def shift(self, c) -> Matrix:
        """Return ``self - c I``."""
        if not self.is_square:
            raise DimensionError("shift needs a square matrix")
        c = _coerce_scalar(c, self.field)
        return Matrix._from_raw(
            [[x - c if i == j else x for j, x in enumerate(row)] for i, row in enumerate(self._raw)],
            self.field,
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._raw)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> Matrix:
        return inverse(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._raw == other._raw

    def __hash__(self) -> int:
        return hash((self._raw, self.field))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._raw)
        return f"Matrix([{body}])"

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._raw]


# -- elimination ---------------------------------------------------------


def _integer_rows(raw_rows) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for row in raw_rows:
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([x.numerator * (m // x.denominator) for x in row])
    return out


def _bareiss_rank(rows: list[list[int]]) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, len(rows)):
            ri = rows[i]
            f = ri[col]
            # exact by Sylvester's identity
            rows[i] = [(p * ri[k] - f * prow[k]) // prev for k in range(n)]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def _modp_rank(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[col], -1, p)
        for i in range(r + 1, len(rows)):
            f = rows[i][col] * inv % p
            if f:
                ri = rows[i]
                rows[i] = [(ri[k] - f * prow[k]) % p for k in range(n)]
        r += 1
        if r == len(rows):
            break
    return r


def rank(m: Matrix) -> int:
    """Exact rank. Pivots are the first nonzero entry scanning columns left to right."""
    if m.field.is_rational:
        return _bareiss_rank(_integer_rows(m.raw))
    return _modp_rank(m.raw, m.field.modulus)


def rank_of(vectors: Sequence[Vector]) -> int:
    """Rank of the span of ``vectors``."""
    if not vectors:
        return 0
    field = vectors[0].field
    for v in vectors:
        _check_same_field(v.field, field)
    if field.is_rational:
        return _bareiss_rank(_integer_rows([v.raw for v in vectors]))
    return _modp_rank([v.raw for v in vectors], field.modulus)


def in_span(x: Vector, vectors: Sequence[Vector]) -> bool:
    return rank_of(list(vectors) + [x]) == rank_of(vectors)


def same_span(u: Sequence[Vector], w: Sequence[Vector]) -> bool:
    ru = rank_of(u)
    return ru == rank_of(w) == rank_of(list(u) + list(w))


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the field."""
    if not m.is_square:
        raise DimensionError("only square matrices are invertible")
    n = m.shape[0]
    f = m.field
    one = Scalar._make(f.raw(1), f)
    aug = [[Scalar._make(x, f) for x in row] + [one if i == j else 0 * one for j in range(n)]
           for i, row in enumerate(m.raw)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return Matrix._from_raw([[x.value for x in row[n:]] for row in aug], f)


# -- polynomials in a matrix ----------------------------------------------


def poly_apply(m: Matrix, roots: Sequence, v: Vector) -> Vector:
    """Return ``(m - r_1 I)(m - r_2 I)...(m - r_k I) v``.

    Factors are applied to the vector one at a time, rightmost first; the
    product matrix is never formed. An empty root list returns ``v``.
    """
    if not m.is_square:
        raise DimensionError("poly_apply needs a square matrix")
    if m.shape[1] != len(v):
        raise DimensionError(f"cannot apply {m.shape} matrix to length-{len(v)} vector")
    _check_same_field(m.field, v.field)
    field = m.field
    rows = m.raw
    cur = v.raw
    for r in reversed(list(roots)):
        c = _coerce_scalar(r, field)
        cur = [sum(a * b for a, b in zip(row, cur)) - c * x for row, x in zip(rows, cur)]
        if field.kind == PRIME:
            cur = [x % field.modulus for x in cur]
    return Vector._from_raw(cur, field)


@dataclass(frozen=True)
class EigStructure:
    """A multiplicity-free matrix together with an ordering of its spectrum
    and the matching primitive idempotents."""

    matrix: Matrix
    eigenvalues: tuple[Scalar, ...]
    idempotents: tuple[Matrix, ...]

    @property
    def d(self) -> int:
        return len(self.eigenvalues) - 1

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    def reversed(self) -> EigStructure:
        return EigStructure(self.matrix, self.eigenvalues[::-1], self.idempotents[::-1])

    def seed_vector(self) -> Vector:
        """Sum over i of the first nonzero column of E_i."""
        total = Vector.zeros(self.matrix.shape[0], self.field)
        for e in self.idempotents:
            total = total + next(c for c in e.columns() if not c.is_zero())
        return total


def check_distinct(values: Sequence[Scalar]) -> None:
    seen: dict = {}
    for i, x in enumerate(values):
        if x in seen:
            raise DuplicateEigenvalueError(seen[x], i, x)
        seen[x] = i


def primitive_idempotents(m: Matrix, eigenvalues: Sequence) -> EigStructure:
    """Build E_i = prod_{j != i} (m - theta_j I) / (theta_i - theta_j).

    The result is accepted only if the E_i sum to I, are mutually orthogonal
    idempotents of rank one and satisfy ``m E_i = E_i m = theta_i E_i``;
    together these certify that ``m`` is multiplicity-free with exactly this
    spectrum.
    """
    if not m.is_square:
        raise DimensionError(f"matrix must be square, got {m.shape}")
    n = m.shape[0]
    field = m.field
    theta = tuple(field.element(x) for x in eigenvalues)
    if len(theta) != n:
        raise DimensionError(f"{n}x{n} matrix needs {n} eigenvalues, got {len(theta)}")
    if n == 0:
        raise DimensionError("empty matrix")
    check_distinct(theta)

    shifted = [m.shift(t) for t in theta]
    ident = Matrix.identity(n, field)
    prefix = [ident]
    for s in shifted[:-1]:
        prefix.append(prefix[-1] @ s)
    suffix = [ident]
    for s in reversed(shifted[1:]):
        suffix.append(s @ suffix[-1])
    suffix.reverse()

    idem = []
    for i in range(n):
        denom = field.one
        for j in range(n):
            if j != i:
                denom = denom * (theta[i] - theta[j])
        idem.append((prefix[i] @ suffix[i]) / denom)

    total = Matrix.zeros(n, field=field)
    for e in idem:
        total = total + e
    if total != ident:
        raise NotMultiplicityFreeError("idempotents do not sum to the identity")
    for i, e in enumerate(idem):
        if e.is_zero():
            raise NotMultiplicityFreeError(f"E_{i} = 0: theta_{i} = {theta[i]} is not an eigenvalue")
        if m @ e != e * theta[i] or e @ m != e * theta[i]:
            raise NotMultiplicityFreeError(f"A E_{i} != theta_{i} E_{i}")
        if rank(e) != 1:
            raise NotMultiplicityFreeError(f"rank E_{i} = {rank(e)}, expected 1")
    for i in range(n):
        for j in range(i, n):
            prod = idem[i] @ idem[j]
            if i == j and prod != idem[i]:
                raise NotMultiplicityFreeError(f"E_{i} is not idempotent")
            if i != j and not prod.is_zero():
                raise NotMultiplicityFreeError(f"E_{i} E_{j} != 0")
    return EigStructure(m, theta, tuple(idem))
