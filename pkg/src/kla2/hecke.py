"""Hecke algebra of A~2: standard basis arithmetic and the Kazhdan-Lusztig basis.

Normalization: ``KL(s) = H_s + v H_e`` and ``h_{y,x}`` lies in ``v N[v]`` for
``y < x``. The KL basis is computed by induction on length through the
right-descent mu-recursion; the bar involution is only used for checking.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Sequence

from kla2 import coxeter as cx
from kla2.coxeter import Elt, IDENTITY, length, mul_left_gen, mul_right_gen
from kla2.laurent import LPoly, ONE, ZERO, lsum

__all__ = [
    "HeckeElt", "KLCombination", "unit", "kl_gen",
    "mul_kl_gen_right", "mul_kl_gen_left", "mul_kl_word",
    "mul_std_gen_right", "mul_std_gen_left", "mul", "bar_involution",
    "kl_basis", "kl_basis_via", "kl_basis_via_left", "klpoly", "mu", "n_elt",
    "content", "to_kl", "from_kl", "is_perverse", "equal_up_to_perverse",
    "pairing", "coeff_of", "hom_rank", "hom_rank_quotient", "apply_color",
]

Coeff = LPoly | int


class _Combination:
    """Finitely supported map Elt -> LPoly with no zero values."""

    basis = ""
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Elt, Coeff] | None = None):
        t: dict[Elt, LPoly] = {}
        if terms:
            for x, p in terms.items():
                if isinstance(p, int):
                    p = LPoly.const(p)
                if p:
                    t[x] = p
        self.terms = t

    @classmethod
    def _from_acc(cls, acc: dict[Elt, dict[int, int]]):
        obj = cls.__new__(cls)
        t = {}
        for x, c in acc.items():
            c = {k: a for k, a in c.items() if a}
            if c:
                t[x] = LPoly._raw(c)
        obj.terms = t
        return obj

    def coeff(self, x: Elt) -> LPoly:
        return self.terms.get(x, ZERO)

    def support(self) -> list[Elt]:
        return cx.sorted_elts(self.terms)

    def items(self) -> Iterator[tuple[Elt, LPoly]]:
        for x in self.support():
            yield x, self.terms[x]

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _combine(self, other, sign: int):
        if type(other) is not type(self):
            return NotImplemented
        acc: dict[Elt, dict[int, int]] = {}
        for x, p in self.terms.items():
            acc[x] = dict(p._c)
        for x, p in other.terms.items():
            _acc(acc, x, p, 0, sign)
        return type(self)._from_acc(acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({x: -p for x, p in self.terms.items()})

    def scale(self, c: Coeff):
        if isinstance(c, int):
            c = LPoly.const(c)
        return type(self)({x: c * p for x, p in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, LPoly)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        sym = "H" if self.basis == "standard" else "KL"
        body = " + ".join(f"({p})*{sym}[{cx.word_str(x)}]" for x, p in self.items())
        return f"{type(self).__name__}({body})"

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"elt": cx.word_str(x), "poly": p.to_json_obj()} for x, p in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping):
        if obj.get("basis") != cls.basis:
            raise ValueError(f"expected basis {cls.basis!r}, got {obj.get('basis')!r}")
        terms: dict[Elt, LPoly] = {}
        for term in obj["terms"]:
            x = cx.from_word(term["elt"])
            terms[x] = terms.get(x, ZERO) + LPoly.from_json_obj(term["poly"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str):
        return cls.from_json_obj(json.loads(text))


class HeckeElt(_Combination):
    """Element of H in the standard basis ``{H_x}``."""

    basis = "standard"
    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mul(self, other)
        if isinstance(other, (int, LPoly)):
            return self.scale(other)
        return NotImplemented


class KLCombination(_Combination):
    """Element of H in KL-basis coordinates ``{KL(x)}``."""

    basis = "kl"
    __slots__ = ()


def _acc(acc: dict, x: Elt, p: LPoly, shift: int, sign: int = 1) -> None:
    c = acc.get(x)
    if c is None:
        c = acc[x] = {}
    for k, a in p._c.items():
        k += shift
        c[k] = c.get(k, 0) + sign * a


def unit(x: Elt) -> HeckeElt:
    """The standard basis element ``H_x``."""
    return HeckeElt({x: ONE})


def kl_gen(s: int) -> HeckeElt:
    """``KL(s) = H_s + v H_e``."""
    return HeckeElt({mul_right_gen(IDENTITY, s): ONE, IDENTITY: LPoly.v()})


# ---- products with generators -----------------------------------------------


def mul_kl_gen_right(h: HeckeElt, s: int) -> HeckeElt:
    """``h * KL(s)``: ``H_x KL(s) = H_xs + v^{+-1} H_x`` (+ when ``xs > x``)."""
    acc: dict[Elt, dict[int, int]] = {}
    for x, p in h.terms.items():
        xs = mul_right_gen(x, s)
        _acc(acc, xs, p, 0)
        _acc(acc, x, p, 1 if length(xs) > length(x) else -1)
    return HeckeElt._from_acc(acc)


def mul_kl_gen_left(s: int, h: HeckeElt) -> HeckeElt:
    """``KL(s) * h``."""
    acc: dict[Elt, dict[int, int]] = {}
    for x, p in h.terms.items():
        sx = mul_left_gen(s, x)
        _acc(acc, sx, p, 0)
        _acc(acc, x, p, 1 if length(sx) > length(x) else -1)
    return HeckeElt._from_acc(acc)


def mul_kl_word(h: HeckeElt, word: Iterable[int]) -> HeckeElt:
    for s in cx.parse_word(word):
        h = mul_kl_gen_right(h, s)
    return h


def mul_std_gen_right(h: HeckeElt, s: int) -> HeckeElt:
    """``h * H_s``; ``H_x H_s = H_xs + (v^-1 - v) H_x`` when ``xs < x``."""
    acc: dict[Elt, dict[int, int]] = {}
    for x, p in h.terms.items():
        xs = mul_right_gen(x, s)
        _acc(acc, xs, p, 0)
        if length(xs) < length(x):
            _acc(acc, x, p, -1)
            _acc(acc, x, p, 1, -1)
    return HeckeElt._from_acc(acc)


def mul_std_gen_left(s: int, h: HeckeElt) -> HeckeElt:
    acc: dict[Elt, dict[int, int]] = {}
    for x, p in h.terms.items():
        sx = mul_left_gen(s, x)
        _acc(acc, sx, p, 0)
        if length(sx) < length(x):
            _acc(acc, x, p, -1)
            _acc(acc, x, p, 1, -1)
    return HeckeElt._from_acc(acc)


def mul(h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
    """Full product, expanding each ``H_y`` of ``h2`` along a reduced word."""
    parts = []
    for y, q in h2.terms.items():
        prod = h1
        for s in cx.to_canonical_word(y):
            prod = mul_std_gen_right(prod, s)
        parts.append(prod.scale(q))
    acc: dict[Elt, dict[int, int]] = {}
    for part in parts:
        for x, p in part.terms.items():
            _acc(acc, x, p, 0)
    return HeckeElt._from_acc(acc)


_bar_memo: dict[Elt, HeckeElt] = {IDENTITY: unit(IDENTITY)}
_V_MINUS_VINV = LPoly({1: 1, -1: -1})


def _bar_std(x: Elt) -> HeckeElt:
    hit = _bar_memo.get(x)
    if hit is not None:
        return hit
    s = min(cx.right_descents(x))
    prev = _bar_std(mul_right_gen(x, s))
    # bar(H_s) = H_s + (v - v^-1) H_e
    out = mul_std_gen_right(prev, s) + prev.scale(_V_MINUS_VINV)
    return _bar_memo.setdefault(x, out)


def bar_involution(h: HeckeElt) -> HeckeElt:
    """Ring involution with ``v -> v^-1`` and ``H_x -> (H_{x^-1})^-1``."""
    acc: dict[Elt, dict[int, int]] = {}
    for x, p in h.terms.items():
        pb = p.bar()
        for y, q in _bar_std(x).terms.items():
            _acc(acc, y, pb * q, 0)
    return HeckeElt._from_acc(acc)


# ---- Kazhdan-Lusztig basis --------------------------------------------------

_kl_memo: dict[Elt, HeckeElt] = {IDENTITY: unit(IDENTITY)}


def kl_basis_via(x: Elt, s: int) -> HeckeElt:
    """``KL(x)`` from ``KL(xs) KL(s)`` minus mu-corrections, for ``s`` a right descent."""
    xs = mul_right_gen(x, s)
    if length(xs) > length(x):
        raise ValueError(f"{s} is not a right descent of {cx.word_str(x)!r}")
    prev = kl_basis(xs)
    out = mul_kl_gen_right(prev, s)
    for y, p in prev.terms.items():
        if y == xs:
            continue
        m = p.coeff(1)
        if m and length(mul_right_gen(y, s)) < length(y):
            out = out - kl_basis(y).scale(m)
    return out


def kl_basis_via_left(x: Elt, s: int) -> HeckeElt:
    """Left-handed twin of :func:`kl_basis_via` (``s`` a left descent)."""
    sx = mul_left_gen(s, x)
    if length(sx) > length(x):
        raise ValueError(f"{s} is not a left descent of {cx.word_str(x)!r}")
    prev = kl_basis(sx)
    out = mul_kl_gen_left(s, prev)
    for y, p in prev.terms.items():
        if y == sx:
            continue
        m = p.coeff(1)
        if m and length(mul_left_gen(s, y)) < length(y):
            out = out - kl_basis(y).scale(m)
    return out


def kl_basis(x: Elt) -> HeckeElt:
    """The canonical basis element ``KL(x) = sum_y h_{y,x} H_y`` (memoized)."""
    hit = _kl_memo.get(x)
    if hit is not None:
        return hit
    out = kl_basis_via(x, min(cx.right_descents(x)))
    return _kl_memo.setdefault(x, out)


def klpoly(y: Elt, x: Elt) -> LPoly:
    """``h_{y,x}``."""
    return kl_basis(x).coeff(y)


def mu(y: Elt, x: Elt) -> int:
    return kl_basis(x).coeff(y).coeff(1)


def n_elt(x: Elt) -> HeckeElt:
    """``N_x = sum_{y <= x} v^{l(x)-l(y)} H_y``."""
    lx = length(x)
    return HeckeElt({y: LPoly._raw({lx - length(y): 1}) for y in cx.lower_interval(x)})


def content(h: _Combination) -> int:
    return sum(p.eval_at_one() for p in h.terms.values())


def to_kl(h: HeckeElt) -> KLCombination:
    """Change to KL coordinates by stripping maximal-length terms."""
    rest = dict(h.terms)
    out: dict[Elt, LPoly] = {}
    while rest:
        w = min(rest, key=lambda x: (-length(x), cx.word_str(x)))
        c = rest[w]
        out[w] = c
        for y, p in kl_basis(w).terms.items():
            q = rest.get(y, ZERO) - c * p
            if q:
                rest[y] = q
            else:
                rest.pop(y, None)
    return KLCombination(out)


def from_kl(k: KLCombination) -> HeckeElt:
    acc: dict[Elt, dict[int, int]] = {}
    for w, c in k.terms.items():
        for y, p in kl_basis(w).terms.items():
            _acc(acc, y, c * p, 0)
    return HeckeElt._from_acc(acc)


def is_perverse(k: KLCombination) -> bool:
    """All KL coordinates are nonnegative integers."""
    return all(p.is_constant() and p.coeff(0) > 0 for p in k.terms.values())


def equal_up_to_perverse(h1: HeckeElt, h2: HeckeElt) -> bool:
    """``h1 + p1 == h2 + p2`` for some perverse ``p1, p2``."""
    return all(p.is_constant() for p in to_kl(h1 - h2).terms.values())


def pairing(h1: _Combination, h2: _Combination) -> LPoly:
    """Bilinear form with ``(H_x, H_y) = delta_{x,y}``."""
    small, big = (h1, h2) if len(h1) <= len(h2) else (h2, h1)
    return lsum(p * big.terms[x] for x, p in small.terms.items() if x in big.terms)


def coeff_of(h: HeckeElt, y: Elt) -> LPoly:
    return h.coeff(y)


def hom_rank(x: Elt, y: Elt) -> LPoly:
    """Graded rank of ``Hom(B_x, B_y)``: ``sum_z h_{z,x} h_{z,y}``."""
    return pairing(kl_basis(x), kl_basis(y))


def hom_rank_quotient(ch: HeckeElt, y: Elt) -> LPoly:
    """Graded rank of ``Hom_{not < y}(B, B_y)`` for an object with character ``ch``."""
    return ch.coeff(y)


def apply_color(sigma: Sequence[int], h: _Combination) -> _Combination:
    """Push a combination through the diagram automorphism ``sigma``."""
    return type(h)({cx.color_perm(sigma, x): p for x, p in h.terms.items()})
