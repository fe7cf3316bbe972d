"""Exact scalars over the rationals and over prime fields GF(p).

A ``FieldSpec`` names the field; a ``Scalar`` is an immutable element of it.
Rational values are ``fractions.Fraction`` (always in lowest terms with a
positive denominator); GF(p) values are ints in ``[0, p)``.

The linear algebra layer reads ``Scalar.value`` directly and pushes raw
results back through ``FieldSpec.element`` so the hot loops avoid one
wrapper object per intermediate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError, ParseError

RATIONAL = "rational"
PRIME = "gfp"

_NUMBER = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == RATIONAL:
            if self.modulus is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.modulus, int) or isinstance(self.modulus, bool):
                raise ValueError("GF(p) needs an integer modulus")
            if not is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(RATIONAL)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(PRIME, p)

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def __str__(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.modulus})"

    # -- element construction -------------------------------------------

    def raw(self, x) -> Fraction | int:
        """Normalize an int/Fraction into this field's raw representation."""
        if self.kind == RATIONAL:
            return x if type(x) is Fraction else Fraction(x)
        p = self.modulus
        if type(x) is int:
            return x % p
        x = Fraction(x)
        den = x.denominator % p
        if den == 0:
            raise ZeroDivisionError(f"denominator {x.denominator} vanishes in {self}")
        return x.numerator * pow(den, -1, p) % p

    def element(self, x: ScalarLike) -> Scalar:
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatchError(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError(f"cannot interpret {x!r} as an element of {self}")
        return Scalar._make(self.raw(x), self)

    def __call__(self, x: ScalarLike) -> Scalar:
        return self.element(x)

    def parse(self, text: str) -> Scalar:
        """Parse ``"n"`` or ``"n/d"``; the unicode minus sign is accepted."""
        if not isinstance(text, str):
            raise ParseError(f"expected a string, got {type(text).__name__}")
        m = _NUMBER.match(text.replace("−", "-"))
        if m is None:
            raise ParseError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        try:
            return Scalar._make(self.raw(Fraction(num, den)), self)
        except ZeroDivisionError:
            raise ParseError(f"{text!r} is not representable in {self}: denominator is 0 mod {self.modulus}") from None

    @property
    def zero(self) -> Scalar:
        return Scalar._make(self.raw(0), self)

    @property
    def one(self) -> Scalar:
        return Scalar._make(self.raw(1), self)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        if self.is_rational:
            return {"kind": "rational"}
        return {"kind": "gfp", "p": self.modulus}

    @classmethod
    def from_json(cls, obj) -> FieldSpec:
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ParseError(f"bad field spec {obj!r}")
        try:
            if obj["kind"] == "rational":
                return cls.rational()
            if obj["kind"] == "gfp":
                return cls.gf(obj.get("p"))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        raise ParseError(f"unknown field kind {obj['kind']!r}")

    @classmethod
    def from_flag(cls, text: str) -> FieldSpec:
        """Parse the CLI form ``rational`` or ``gfp:<p>``."""
        if text == "rational":
            return cls.rational()
        if text.startswith("gfp:"):
            try:
                return cls.gf(int(text[4:]))
            except ValueError as exc:
                raise ParseError(f"bad field flag {text!r}: {exc}") from None
        raise ParseError(f"bad field flag {text!r}; expected 'rational' or 'gfp:<p>'")


QQ = FieldSpec.rational()


class Scalar:
    """Immutable field element.

    Mixed arithmetic with Python ints (and Fractions) coerces them into the
    scalar's field. Mixing two different fields raises FieldMismatchError.
    """

    __slots__ = ("value", "field")

    value: Fraction | int
    field: FieldSpec

    def __init__(self, value, field: FieldSpec = QQ) -> None:
        object.__setattr__(self, "value", field.raw(value))
        object.__setattr__(self, "field", field)

    @classmethod
    def _make(cls, raw, field: FieldSpec) -> Scalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "value", raw)
        object.__setattr__(obj, "field", field)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.value, self.field))

    def _coerce(self, other) -> Fraction | int | None:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field} elements")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.raw(other)
        return None

    def _wrap(self, raw) -> Scalar:
        f = self.field
        if f.kind == PRIME:
            raw %= f.modulus
        return Scalar._make(raw, f)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Scalar._make(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._make(o, self.field) * self.inverse()

    def __neg__(self) -> Scalar:
        return self._wrap(-self.value)

    def __pos__(self) -> Scalar:
        return self

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.kind == PRIME:
            return Scalar._make(pow(self.value, n, self.field.modulus), self.field)
        return Scalar._make(self.value**n, self.field)

    def inverse(self) -> Scalar:
        if not self.value:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        if self.field.kind == PRIME:
            return Scalar._make(pow(self.value, -1, self.field.modulus), self.field)
        return Scalar._make(1 / self.value, self.field)

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == self.field.raw(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        if self.field.is_rational:
            return f"Scalar({str(self.value)!r})"
        return f"Scalar({self.value}, {self.field})"


ScalarLike = Union[Scalar, int, Fraction, str]


def scalar_parse(text: str, field: FieldSpec = QQ) -> Scalar:
    return field.parse(text)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two same-field scalars."""
    if not (isinstance(a, Scalar) and isinstance(b, Scalar)):
        raise TypeError("scalar_arith takes two Scalars")
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine {a.field} and {b.field} elements")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
