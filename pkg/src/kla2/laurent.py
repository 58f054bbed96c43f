"""Exact Laurent polynomials in ``v`` with integer coefficients.

>>> v = LPoly.v()
>>> (v + v.bar()) * v
LPoly('1 + v^2')
>>> (v**2 + 1).eval_at_one()
2
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping, Union

__all__ = ["LPoly", "ZeroPolynomialError", "monomial", "ZERO", "ONE", "V"]


class ZeroPolynomialError(ValueError):
    """Raised when a degree is requested from the zero polynomial."""


Scalar = Union[int, "LPoly"]


class LPoly:
    """Sparse Laurent polynomial: a map exponent -> nonzero int.

    Instances are immutable and hashable; equal polynomials have identical
    internal maps.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for k, a in coeffs.items():
                if a:
                    c[int(k)] = int(a)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LPoly":
        # c must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def v(cls) -> "LPoly":
        return cls._raw({1: 1})

    @classmethod
    def const(cls, a: int) -> "LPoly":
        return cls._raw({0: int(a)} if a else {})

    # ---- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LPoly":
        if isinstance(other, LPoly):
            return other
        if isinstance(other, int):
            return LPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        c = dict(self._c)
        for k, a in other._c.items():
            b = c.get(k, 0) + a
            if b:
                c[k] = b
            else:
                del c[k]
        return LPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LPoly._raw({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, int] = {}
        for k1, a1 in self._c.items():
            for k2, a2 in other._c.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + a1 * a2
        return LPoly._raw({k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have negative powers")
            ((k, a),) = self._c.items()
            if a not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LPoly._raw({k * e: a ** (-e)})
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "LPoly":
        """Multiply by ``v**k``."""
        if k == 0:
            return self
        return LPoly._raw({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LPoly":
        """The involution ``v -> v^-1``."""
        return LPoly._raw({-k: a for k, a in self._c.items()})

    # ---- queries -------------------------------------------------------------

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def min_deg(self) -> int:
        if not self._c:
            raise ZeroPolynomialError("zero polynomial has no minimal degree")
        return min(self._c)

    def max_deg(self) -> int:
        if not self._c:
            raise ZeroPolynomialError("zero polynomial has no maximal degree")
        return max(self._c)

    def is_nonneg(self) -> bool:
        return all(a > 0 for a in self._c.values())

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def support(self) -> list[int]:
        return sorted(self._c)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly.const(other)
        if not isinstance(other, LPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # ---- text / JSON -------------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, a in self.items():
            if k == 0:
                term = str(abs(a))
            else:
                mono = "v" if k == 1 else f"v^{k}"
                term = mono if abs(a) == 1 else f"{abs(a)}*{mono}"
            if not parts:
                parts.append(term if a > 0 else f"-{term}")
            else:
                parts.append(("+ " if a > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"LPoly({str(self)!r})"

    _TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*(v(?:\^\s*(-?\d+))?)?\s*")

    @classmethod
    def parse(cls, text: str) -> "LPoly":
        """Parse the textual form, e.g. ``"v^-2 + 3 + v^2"`` or ``"-2*v + 1"``."""
        s = text.strip()
        if s == "0":
            return ZERO
        c: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial at offset {pos}: {text!r}")
            sign, num, mono, exp = m.groups()
            if num is None and mono is None:
                raise ValueError(f"empty term at offset {pos}: {text!r}")
            if sign is None and not first:
                raise ValueError(f"missing operator at offset {pos}: {text!r}")
            a = int(num) if num is not None else 1
            if sign == "-":
                a = -a
            k = 0 if mono is None else (int(exp) if exp is not None else 1)
            c[k] = c.get(k, 0) + a
            pos = m.end()
            first = False
        return LPoly(c)

    def to_json_obj(self) -> dict[str, int]:
        return {str(k): a for k, a in self.items()}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, int]) -> "LPoly":
        return cls({int(k): int(a) for k, a in obj.items()})

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "LPoly":
        return cls.from_json_obj(json.loads(text))


def monomial(c: int, k: int) -> LPoly:
    """``c * v**k``."""
    return LPoly._raw({k: int(c)} if c else {})


def lsum(polys: Iterable[LPoly]) -> LPoly:
    out: dict[int, int] = {}
    for p in polys:
        for k, a in p._c.items():
            out[k] = out.get(k, 0) + a
    return LPoly._raw({k: a for k, a in out.items() if a})


ZERO = LPoly()
ONE = LPoly.const(1)
V = LPoly.v()
