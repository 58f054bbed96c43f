"""The affine Weyl group of type A~2 in window notation.

An element is an affine permutation ``f: Z -> Z`` with ``f(i+3) = f(i)+3``
and ``f(1)+f(2)+f(3) = 6``; it is stored as its window ``(f(1), f(2), f(3))``.
Generators are the ints 1, 2, 3; any integer label resolves mod 3, so the
label 0 (the usual ``s_0``) is ``s_3``.

>>> x = from_word("1231")
>>> length(x), word_str(x)
(4, '1231')
>>> bruhat_leq(from_word("1"), x)
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "Elt", "Word", "FamilyTag", "S3", "IDENTITY",
    "gen", "make_elt", "identity", "parse_word", "parse_window",
    "mul_right_gen", "mul_left_gen", "mul", "inverse",
    "length", "right_descents", "left_descents",
    "from_word", "to_canonical_word", "word_str", "is_reduced",
    "braid_reduced_criterion", "bruhat_leq", "lower_interval", "coatoms",
    "color_perm", "color_perm_word", "canonical_key", "sorted_elts",
    "x_word", "x_elt", "theta_word", "theta_elt", "theta_r", "theta_s",
    "y_wall", "y_wall_intro", "z_wall", "z_prime_wall",
    "representative", "classify", "classify_all", "family_class", "set_product",
    "elements_up_to", "elements_of_length",
]


class Elt(NamedTuple):
    """Window ``(f(1), f(2), f(3))`` of an affine permutation of period 3."""

    a: int
    b: int
    c: int

    def __mul__(self, other):  # type: ignore[override]
        return mul(self, other)

    def __str__(self):
        return word_str(self)


Word = tuple  # tuple of generators in {1, 2, 3}

IDENTITY = Elt(1, 2, 3)

# color permutations as tuples (sigma(1), sigma(2), sigma(3))
S3: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations((1, 2, 3)))  # type: ignore[assignment]


def gen(label: int) -> int:
    """Resolve an integer label to a generator in {1, 2, 3}."""
    return (label - 1) % 3 + 1


def make_elt(window: Sequence[int]) -> Elt:
    """Validated constructor from a window triple."""
    if len(window) != 3:
        raise ValueError(f"window must have 3 entries, got {len(window)}")
    a, b, c = (int(t) for t in window)
    if a + b + c != 6:
        raise ValueError(f"window entries must sum to 6: {window!r}")
    if len({a % 3, b % 3, c % 3}) != 3:
        raise ValueError(f"window residues mod 3 must be distinct: {window!r}")
    return Elt(a, b, c)


def identity() -> Elt:
    return IDENTITY


def parse_word(text: Union[str, Iterable[int]]) -> Word:
    """Digits string (labels resolved mod 3) or iterable of ints -> Word."""
    if isinstance(text, str):
        out = []
        for i, ch in enumerate(text):
            if not ch.isdigit():
                raise ValueError(f"bad letter {ch!r} at offset {i} in word {text!r}")
            out.append(gen(int(ch)))
        return tuple(out)
    return tuple(gen(int(k)) for k in text)


def parse_window(text: str) -> Elt:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"window must look like (a,b,c): {text!r}")
    return make_elt([int(t) for t in s[1:-1].split(",")])


# ---- group structure ------------------------------------------------------------


def mul_right_gen(x: Elt, s: int) -> Elt:
    """``x * s``: swaps window positions."""
    a, b, c = x
    if s == 1:
        return Elt(b, a, c)
    if s == 2:
        return Elt(a, c, b)
    if s == 3:
        return Elt(c - 3, b, a + 3)
    raise ValueError(f"not a generator: {s!r}")


def _left_value(s: int, t: int) -> int:
    r = t % 3
    if s == 1:
        return t + 1 if r == 1 else (t - 1 if r == 2 else t)
    if s == 2:
        return t + 1 if r == 2 else (t - 1 if r == 0 else t)
    if s == 3:
        return t + 1 if r == 0 else (t - 1 if r == 1 else t)
    raise ValueError(f"not a generator: {s!r}")


def mul_left_gen(s: int, x: Elt) -> Elt:
    """``s * x``: swaps the two residue classes of values that ``s`` connects."""
    return Elt(_left_value(s, x[0]), _left_value(s, x[1]), _left_value(s, x[2]))


def _apply(x: Elt, t: int) -> int:
    q, r = divmod(t - 1, 3)
    return x[r] + 3 * q


def mul(x: Elt, y: Elt) -> Elt:
    """Composition ``x o y`` of affine permutations."""
    return Elt(_apply(x, y[0]), _apply(x, y[1]), _apply(x, y[2]))


def inverse(x: Elt) -> Elt:
    w = [0, 0, 0]
    for j, t in enumerate(x, start=1):
        q, r = divmod(t - 1, 3)
        w[r] = j - 3 * q
    return Elt(*w)


def length(x: Elt) -> int:
    a, b, c = x
    return abs((b - a) // 3) + abs((c - a) // 3) + abs((c - b) // 3)


def _is_right_descent(x: Elt, s: int) -> bool:
    a, b, c = x
    if s == 1:
        return a > b
    if s == 2:
        return b > c
    return c > a + 3


def right_descents(x: Elt) -> frozenset[int]:
    return frozenset(s for s in (1, 2, 3) if _is_right_descent(x, s))


def left_descents(x: Elt) -> frozenset[int]:
    return right_descents(inverse(x))


def from_word(w: Union[str, Iterable[int]]) -> Elt:
    x = IDENTITY
    for s in parse_word(w):
        x = mul_right_gen(x, s)
    return x


_canon_cache: dict[Elt, Word] = {IDENTITY: ()}


def to_canonical_word(x: Elt) -> Word:
    """Lexicographically smallest reduced word (greedy smallest left descent)."""
    hit = _canon_cache.get(x)
    if hit is not None:
        return hit
    letters = []
    y = x
    while y != IDENTITY:
        known = _canon_cache.get(y)
        if known is not None:
            letters.extend(known)
            break
        s = min(left_descents(y))
        letters.append(s)
        y = mul_left_gen(s, y)
    word = tuple(letters)
    return _canon_cache.setdefault(x, word)


def word_str(x_or_word: Union[Elt, Sequence[int]]) -> str:
    """Canonical textual form: digit string over {1,2,3}, '' for the identity."""
    if isinstance(x_or_word, Elt):
        x_or_word = to_canonical_word(x_or_word)
    return "".join(str(s) for s in x_or_word)


def canonical_key(x: Elt) -> tuple[int, str]:
    """Sort key: length first, then canonical word."""
    return (length(x), word_str(x))


def sorted_elts(elts: Iterable[Elt]) -> list[Elt]:
    return sorted(elts, key=canonical_key)


def is_reduced(w: Union[str, Iterable[int]]) -> bool:
    w = parse_word(w)
    return length(from_word(w)) == len(w)


def braid_reduced_criterion(w: Union[str, Iterable[int]]) -> bool:
    """Reducedness via parity of distances between braid triplets.

    A braid triplet sits at position ``i`` (1-based, ``1 < i < n``) when
    ``r[i-1] == r[i+1] != r[i]``; the word is reduced iff every pair of
    triplet positions ``i < j`` has ``j - i - 1`` odd. Words with two equal
    adjacent letters are outside the domain.
    """
    w = parse_word(w)
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            raise ValueError(f"adjacent equal letters at positions {i + 1},{i + 2}")
    triplets = [i for i in range(2, len(w)) if w[i - 2] == w[i] != w[i - 1]]
    return all((j - i - 1) % 2 == 1 for i, j in itertools.combinations(triplets, 2))


# ---- Bruhat order ---------------------------------------------------------------

_leq_memo: dict[tuple[Elt, Elt], bool] = {}


def bruhat_leq(y: Elt, x: Elt) -> bool:
    """Bruhat order by the lifting property (memoized)."""
    stack = []
    result = None
    while True:
        if y == x:
            result = True
            break
        ly, lx = length(y), length(x)
        if ly >= lx:
            result = False
            break
        if ly == 0:
            result = True
            break
        hit = _leq_memo.get((y, x))
        if hit is not None:
            result = hit
            break
        stack.append((y, x))
        s = min(left_descents(x))
        sx = mul_left_gen(s, x)
        sy = mul_left_gen(s, y)
        if length(sy) < ly:
            y, x = sy, sx
        else:
            x = sx
    for key in stack:
        _leq_memo.setdefault(key, result)
    return result


_interval_cache: dict[Elt, frozenset] = {}


def lower_interval(x: Elt) -> frozenset:
    """``{y : y <= x}`` by subword closure over the canonical reduced word."""
    hit = _interval_cache.get(x)
    if hit is not None:
        return hit
    word = to_canonical_word(x)
    states = {IDENTITY}
    # reuse the interval of the longest cached prefix
    for k in range(len(word), 0, -1):
        prefix = _interval_cache.get(from_word(word[:k]))
        if prefix is not None:
            states = set(prefix)
            rest = word[k:]
            break
    else:
        rest = word
    for s in rest:
        states |= {mul_right_gen(z, s) for z in states}
    return _interval_cache.setdefault(x, frozenset(states))


def coatoms(x: Elt) -> frozenset:
    """Elements covered by ``x``: one-letter deletions of a reduced word."""
    word = to_canonical_word(x)
    n = len(word)
    out = set()
    for i in range(n):
        y = from_word(word[:i] + word[i + 1:])
        if length(y) == n - 1:
            out.add(y)
    return frozenset(out)


def set_product(A: Iterable[Elt], B: Iterable[Elt]) -> frozenset:
    B = list(B)
    return frozenset(mul(a, b) for a in A for b in B)


def elements_of_length(n: int) -> list[Elt]:
    return [x for x in elements_up_to(n) if length(x) == n]


_ball: list[list[Elt]] = [[IDENTITY]]


def elements_up_to(L: int) -> list[Elt]:
    """All elements of length <= L, in canonical order."""
    while len(_ball) <= L:
        shell = {mul_right_gen(x, s) for x in _ball[-1] for s in (1, 2, 3)}
        k = len(_ball)
        _ball.append(sorted_elts(y for y in shell if length(y) == k))
    return [x for shell in _ball[: L + 1] for x in shell]


# ---- S3 color action --------------------------------------------------------


def color_perm_word(sigma: Sequence[int], w: Iterable[int]) -> Word:
    return tuple(sigma[s - 1] for s in parse_word(w))


def color_perm(sigma: Sequence[int], x: Elt) -> Elt:
    """Image of ``x`` under the diagram automorphism ``s_i -> s_sigma(i)``."""
    if tuple(sigma) == (1, 2, 3):
        return x
    return from_word(color_perm_word(sigma, to_canonical_word(x)))


# ---- families ---------------------------------------------------------------


def x_word(n: int) -> Word:
    if n < 0:
        raise ValueError(f"x_n needs n >= 0, got {n}")
    return tuple(gen(k) for k in range(1, n + 1))


def x_elt(n: int) -> Elt:
    """``x_n = 123123...`` of length n."""
    return from_word(x_word(n))


def theta_word(m: int, n: int) -> Word:
    """``1 2 ... (2m+2) (2m+1) ... (2m-2n+1)`` with labels mod 3."""
    if m < 0 or n < 0:
        raise ValueError(f"theta needs m, n >= 0, got ({m}, {n})")
    up = list(range(1, 2 * m + 3))
    down = list(range(2 * m + 1, 2 * m - 2 * n, -1))
    return tuple(gen(k) for k in up + down)


def theta_elt(m: int, n: int) -> Elt:
    return from_word(theta_word(m, n))


def theta_r(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError(f"theta needs m, n >= 0, got ({m}, {n})")
    return gen(0)


def theta_s(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError(f"theta needs m, n >= 0, got ({m}, {n})")
    return gen(2 * m - 2 * n)


def y_wall(n: int) -> Elt:
    """``y_n = 1 2 ... (n-2) n``."""
    if n < 4:
        raise ValueError(f"y_n needs n >= 4, got {n}")
    return from_word([*range(1, n - 1), n])


def y_wall_intro(n: int) -> Elt:
    """``y_n`` through the other expression ``1 ... (n-4) (n-2) (n-3) (n-2)``."""
    if n < 4:
        raise ValueError(f"y_n needs n >= 4, got {n}")
    return from_word([*range(1, n - 3), n - 2, n - 3, n - 2])


def z_wall(n: int) -> Elt:
    """``z_n = 1 3 4 5 ... (n-2)``."""
    if n < 5:
        raise ValueError(f"z_n needs n >= 5, got {n}")
    return from_word([1, *range(3, n - 1)])


def z_prime_wall(n: int, variant: str = "times_s_n") -> Elt:
    """``z'_n = z_n * s_n`` (default), or ``z_n`` minus its last letter.

    Only ``z_n * s_n`` reproduces the brute-force ``KL(x_n)`` for even ``n``;
    the ``"drop_last"`` reading is kept for comparison.
    """
    if n < 5:
        raise ValueError(f"z'_n needs n >= 5, got {n}")
    word = [1, *range(3, n - 1)]
    if variant == "drop_last":
        return from_word(word[:-1])
    if variant == "times_s_n":
        return from_word(word + [n])
    raise ValueError(f"unknown z' variant {variant!r}")


# ---- classification ---------------------------------------------------------


@dataclass(frozen=True)
class FamilyTag:
    """Which family an element belongs to, up to the color permutation ``sigma``.

    ``kind`` is ``"identity"``, ``"wall"`` (uses ``n``) or ``"beyond"`` (uses
    ``m``, ``n``, ``left_r``, ``right_s``).
    """

    kind: str
    n: int = 0
    m: int = 0
    left_r: bool = False
    right_s: bool = False
    sigma: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if self.kind == "wall" and self.n < 1:
            raise ValueError("Wall(n) needs n >= 1")
        if self.kind == "beyond" and (self.m < 0 or self.n < 0):
            raise ValueError("Beyond(m, n) needs m, n >= 0")
        if self.kind not in ("identity", "wall", "beyond"):
            raise ValueError(f"unknown family kind {self.kind!r}")

    def family(self) -> tuple:
        """The tag without its color permutation."""
        if self.kind == "identity":
            return ("identity",)
        if self.kind == "wall":
            return ("wall", self.n)
        return ("beyond", self.m, self.n, self.left_r, self.right_s)

    def __str__(self):
        perm = "".join(map(str, self.sigma))
        if self.kind == "identity":
            body = "Identity"
        elif self.kind == "wall":
            body = f"Wall({self.n})"
        else:
            body = f"Beyond({self.m},{self.n},r={int(self.left_r)},s={int(self.right_s)})"
        return f"{body}[{perm}]"


def representative(tag: FamilyTag) -> Elt:
    """The uncolored family element the tag names."""
    if tag.kind == "identity":
        return IDENTITY
    if tag.kind == "wall":
        return x_elt(tag.n)
    x = theta_elt(tag.m, tag.n)
    if tag.left_r:
        x = mul_left_gen(theta_r(tag.m, tag.n), x)
    if tag.right_s:
        x = mul_right_gen(x, theta_s(tag.m, tag.n))
    return x


_class_table: dict[Elt, list[FamilyTag]] = {}
_class_upto = [-1]


def _family_shapes(L: int) -> list[FamilyTag]:
    """Uncolored candidate tags whose representative could have length L."""
    if L == 0:
        return [FamilyTag("identity")]
    shapes = [FamilyTag("wall", n=L)]
    for extra, flags in ((0, [(False, False)]), (1, [(True, False), (False, True)]), (2, [(True, True)])):
        k = L - 3 - extra
        if k < 0 or k % 2:
            continue
        half = k // 2
        for m in range(half + 1):
            for r, s in flags:
                shapes.append(FamilyTag("beyond", m=m, n=half - m, left_r=r, right_s=s))
    return shapes


def _build_class_table(L: int) -> None:
    for k in range(_class_upto[0] + 1, L + 1):
        for shape in _family_shapes(k):
            rep = representative(shape)
            if length(rep) != k:
                continue
            for sigma in S3:
                tag = FamilyTag(shape.kind, shape.n, shape.m, shape.left_r, shape.right_s, sigma)
                _class_table.setdefault(color_perm(sigma, rep), []).append(tag)
        _class_upto[0] = k


def classify_all(x: Elt) -> list[FamilyTag]:
    """Every (tag, sigma) with ``color_perm(sigma, representative(tag)) == x``."""
    _build_class_table(length(x))
    return list(_class_table.get(x, ()))


def family_class(tag: FamilyTag) -> tuple:
    """Family up to the color action, which identifies theta(m,n) with theta(n,m)."""
    f = tag.family()
    if f[0] != "beyond":
        return f
    return ("beyond", max(tag.m, tag.n), min(tag.m, tag.n), tag.left_r, tag.right_s)


def classify(x: Elt) -> FamilyTag:
    """The family of ``x``, preferring ``m >= n`` beyond the wall."""
    tags = classify_all(x)
    if not tags:
        raise LookupError(f"no family matches {word_str(x)!r}")
    classes = {family_class(t) for t in tags}
    if len(classes) > 1:
        raise LookupError(f"families overlap at {word_str(x)!r}: {sorted(map(str, tags))}")
    return min(tags, key=lambda t: (t.m < t.n, t.sigma))
