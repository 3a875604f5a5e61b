"""Exact coefficient fields: the rationals and prime fields F_p.

Rationals are ``gmpy2.mpq`` values, which compare and hash like
:class:`fractions.Fraction` but are much faster.  Prime-field elements are
:class:`Mod` instances.  Both support ``+ - * /`` and
comparison with integers, so algebra code is written once for either field.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import product

from gmpy2 import mpq

from .errors import InputError

_RATIONALS = (Fraction, type(mpq()))
_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """Residue class modulo a prime ``p``, stored reduced into ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v % p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise InputError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, _RATIONALS):
            num, den = int(other.numerator), int(other.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"{other} has no image in F_{self.p}")
            return num * pow(den, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Mod(pow(self.v, -1, self.p), self.p) ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "rational" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, Mod):
                raise InputError("cannot coerce a prime-field element into QQ")
            if isinstance(x, float):
                raise InputError(f"refusing inexact scalar {x!r}")
            return mpq(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise InputError(f"cannot coerce F_{x.p} element into F_{self.p}")
            return x
        if isinstance(x, _RATIONALS):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise InputError(f"{x} has no image in F_{self.p}")
            return Mod(num * pow(den, -1, self.p), self.p)
        if isinstance(x, int):
            return Mod(x, self.p)
        raise InputError(f"cannot coerce {x!r} into {self}")

    def parse(self, s: str):
        m = _RATIONAL_RE.match(s)
        if not m:
            raise InputError(f"malformed scalar {s!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise InputError(f"zero denominator in {s!r}")
        return self(mpq(num, den))

    def fmt(self, x) -> str:
        x = self(x)
        if self.p is None:
            return str(x)
        return str(x.v)

    def elements(self):
        if self.p is None:
            raise InputError("QQ cannot be enumerated")
        return [Mod(v, self.p) for v in range(self.p)]

    def vectors(self, n: int):
        """All of F_p^n, in lexicographic order."""
        els = self.elements()
        return product(els, repeat=n)

    def to_json(self) -> dict:
        return {"kind": "rational"} if self.p is None else {"kind": "prime", "p": self.p}

    @classmethod
    def from_json(cls, d: dict) -> "Field":
        kind = d.get("kind")
        if kind == "rational":
            return cls()
        if kind == "prime":
            if "p" not in d:
                raise InputError("prime field needs 'p'")
            return cls(int(d["p"]))
        raise InputError(f"unknown field kind {kind!r}")

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
