"""Command line interface.

Element literals::

    w:121            word in s1, s2, s3
    x:5              x_5 = 12312
    theta:1,1:rs     r theta(1,1) s (flags r and s are optional)
    (0,2,4)          window
    perm:231/x:5     any of the above pushed through a color permutation

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from kla2 import alcove as al
from kla2 import coxeter as cx
from kla2 import hecke as hk
from kla2 import klformulas as kf
from kla2 import leaves as lv
from kla2 import projcoeff as pc
from kla2 import suites
from kla2.coxeter import Elt, FamilyTag

__all__ = ["ElementSyntaxError", "parse_element", "main"]


class ElementSyntaxError(ValueError):
    def __init__(self, text: str, offset: int, msg: str):
        super().__init__(f"{msg} at byte {offset} in {text!r}")
        self.text = text
        self.offset = offset


_INT = re.compile(r"\d+")


def _parse_body(text: str, pos: int) -> Elt:
    rest = text[pos:]
    if rest.startswith("w:"):
        pos += 2
        m = re.compile(r"[123]*").match(text, pos)
        if m.end() != len(text):
            raise ElementSyntaxError(text, m.end(), "expected one of 1, 2, 3")
        return cx.from_word(m.group())
    if rest.startswith("x:"):
        pos += 2
        m = _INT.match(text, pos)
        if not m:
            raise ElementSyntaxError(text, pos, "expected an integer")
        if m.end() != len(text):
            raise ElementSyntaxError(text, m.end(), "unexpected trailing input")
        return cx.x_elt(int(m.group()))
    if rest.startswith("theta:"):
        pos += 6
        m1 = _INT.match(text, pos)
        if not m1:
            raise ElementSyntaxError(text, pos, "expected an integer")
        pos = m1.end()
        if text[pos:pos + 1] != ",":
            raise ElementSyntaxError(text, pos, "expected ','")
        m2 = _INT.match(text, pos + 1)
        if not m2:
            raise ElementSyntaxError(text, pos + 1, "expected an integer")
        pos = m2.end()
        flags = ""
        if pos < len(text):
            if text[pos] != ":":
                raise ElementSyntaxError(text, pos, "expected ':' before flags")
            flags = text[pos + 1:]
            for i, ch in enumerate(flags):
                if ch not in "rs" or ch in flags[:i]:
                    raise ElementSyntaxError(text, pos + 1 + i, "flags must be a subset of {r, s}")
        tag = FamilyTag("beyond", m=int(m1.group()), n=int(m2.group()),
                        left_r="r" in flags, right_s="s" in flags)
        return cx.representative(tag)
    if rest.startswith("("):
        close = text.find(")", pos)
        if close < 0:
            raise ElementSyntaxError(text, len(text), "expected ')'")
        if close != len(text) - 1:
            raise ElementSyntaxError(text, close + 1, "unexpected trailing input")
        parts = text[pos + 1:close].split(",")
        if len(parts) != 3:
            raise ElementSyntaxError(text, pos, "a window has three entries")
        off = pos + 1
        vals = []
        for part in parts:
            if not re.fullmatch(r"\s*-?\d+\s*", part):
                raise ElementSyntaxError(text, off, "expected an integer")
            vals.append(int(part))
            off += len(part) + 1
        try:
            return cx.make_elt(vals)
        except ValueError as exc:
            raise ElementSyntaxError(text, pos, str(exc)) from None
    raise ElementSyntaxError(text, pos, "expected 'w:', 'x:', 'theta:' or '('")


def parse_element(text: str) -> Elt:
    """Parse an element literal; errors carry the byte offset of the problem."""
    sigma = None
    pos = 0
    if text.startswith("perm:"):
        slash = text.find("/")
        if slash < 0:
            raise ElementSyntaxError(text, len(text), "expected '/' after the permutation")
        perm = text[5:slash]
        if sorted(perm) != ["1", "2", "3"]:
            raise ElementSyntaxError(text, 5, "permutation must rearrange 123")
        sigma = tuple(int(c) for c in perm)
        pos = slash + 1
    x = _parse_body(text, pos)
    return cx.color_perm(sigma, x) if sigma else x


# ---- output helpers ---------------------------------------------------------------


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _name(x: Elt) -> str:
    return cx.word_str(x) or "e"


def _print_combination(h, as_json: bool) -> None:
    if as_json:
        _dump(h.to_json_obj())
        return
    for x, p in h.items():
        print(f"{_name(x)}\t{p}")


class UsageError(Exception):
    pass


def _cap(x: Elt, max_len: int) -> Elt:
    if cx.length(x) > max_len:
        raise UsageError(f"element {_name(x)} has length {cx.length(x)} > --max-len {max_len}")
    return x


# ---- commands -------------------------------------------------------------------


def cmd_kl(a) -> int:
    x = _cap(parse_element(a.elem), a.max_len)
    h = kf.kl_closed(x) if a.closed else hk.kl_basis(x)
    _print_combination(h, a.json)
    return 0


def cmd_mu(a) -> int:
    y, x = parse_element(a.y), _cap(parse_element(a.x), a.max_len)
    print(hk.mu(y, x))
    return 0


def cmd_interval(a) -> int:
    x = _cap(parse_element(a.elem), a.max_len)
    iv = cx.sorted_elts(cx.lower_interval(x))
    if a.count:
        print(len(iv))
    elif a.json:
        _dump([cx.word_str(y) for y in iv])
    else:
        for y in iv:
            print(_name(y))
    return 0


def cmd_homrank(a) -> int:
    x, y = _cap(parse_element(a.x), a.max_len), _cap(parse_element(a.y), a.max_len)
    r = hk.hom_rank(x, y)
    if a.json:
        _dump(r.to_json_obj())
    else:
        print(r)
    return 0


def cmd_leaves(a) -> int:
    try:
        word = cx.parse_word(a.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for p in lv.iter_leaves(word, a.bound):
        if a.u_only and not all(d.up for d in p.decorations):
            continue
        print(p.to_json())
    return 0


def cmd_svg(a) -> int:
    x = _cap(parse_element(a.elem), a.max_len)
    nest = [_cap(parse_element(e), a.max_len) for e in a.nest]
    if len(nest) + 1 > len(al.GRAYS):
        raise UsageError(f"at most {len(al.GRAYS) - 1} nested elements")
    shading = [(x, al.GRAYS[0])] + [(e, al.GRAYS[i + 1]) for i, e in enumerate(nest)]
    svg = al.interval_svg(x, shading)
    with open(a.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def cmd_coeffs(a) -> int:
    rows = pc.coeff_table("wall" if a.wall else "beyond", a.max)
    if a.json:
        _dump(rows)
    else:
        print("coeff\tindex\tclosed\trecursive\tequal")
        for r in rows:
            idx = ",".join(map(str, r["index"])) if isinstance(r["index"], list) else r["index"]
            print(f"{r['coeff']}\t{idx}\t{r['closed']}\t{r['recursive']}\t{r['equal']}")
    return 0 if all(r["equal"] for r in rows) else 1


def cmd_verify(a) -> int:
    opts = suites.SuiteOptions(max_len=a.max_len, n=a.n, m=a.m, coeff_max=a.max,
                               coeff_max_beyond=a.max_beyond, seed=a.seed)
    if a.suite == "all":
        reports = suites.run_all(opts)
        ok = all(r.passed for r in reports)
        _dump({"suite": "all", "pass": ok, "suites": [r.to_json_obj() for r in reports]})
    else:
        reports = [suites.run_suite(a.suite, opts)]
        ok = reports[0].passed
        _dump(reports[0].to_json_obj())
    for r in reports:
        print(str(r), file=sys.stderr)
        for mm in r.mismatches:
            print("  " + json.dumps(mm, sort_keys=True), file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kla2", description="Kazhdan-Lusztig combinatorics for affine A2.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_):
        q = sub.add_parser(name, help=help_)
        q.set_defaults(func=fn)
        q.add_argument("--max-len", type=int, default=15, help="length cap for oracle computations")
        return q

    q = cmd("kl", cmd_kl, "canonical basis element in the standard basis")
    q.add_argument("elem")
    q.add_argument("--closed", action="store_true", help="use the closed form for the element's family")
    q.add_argument("--json", action="store_true")

    q = cmd("mu", cmd_mu, "mu(y, x)")
    q.add_argument("y")
    q.add_argument("x")

    q = cmd("interval", cmd_interval, "lower Bruhat interval")
    q.add_argument("elem")
    q.add_argument("--count", action="store_true")
    q.add_argument("--json", action="store_true")

    q = cmd("homrank", cmd_homrank, "graded rank of Hom(B_x, B_y)")
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("--json", action="store_true")

    q = cmd("leaves", cmd_leaves, "light leaves of a word, one JSON object per line")
    q.add_argument("word")
    q.add_argument("--u-only", action="store_true")
    q.add_argument("--bound", type=int, default=lv.LEAF_BOUND)

    q = cmd("svg", cmd_svg, "draw a lower interval")
    q.add_argument("elem")
    q.add_argument("--nest", nargs="*", default=[], help="inner elements, drawn darker")
    q.add_argument("-o", "--output", required=True)

    q = cmd("coeffs", cmd_coeffs, "projector coefficients: closed form against recursion")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--wall", action="store_true")
    g.add_argument("--beyond", action="store_true")
    q.add_argument("--max", type=int, default=20)
    q.add_argument("--json", action="store_true")

    q = cmd("verify", cmd_verify, "run a verification suite")
    q.add_argument("suite", choices=sorted(suites.SUITES) + ["all"])
    q.add_argument("--n", type=int)
    q.add_argument("--m", type=int)
    q.add_argument("--max", type=int, default=10_000, help="wall index range for coeff-recursions")
    q.add_argument("--max-beyond", type=int, default=1_000,
                   help="m and n range for the beyond recursions in coeff-recursions")
    q.add_argument("--seed", type=int, default=0, help="seed for the random deodhar words")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"kla2: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
