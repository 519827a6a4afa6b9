"""Text syntax for bordism words and word files.

A word is ``name`` or ``op(arg, ...)``.  A word file holds lines
``lhs = <word>``, ``rhs = <word>`` and optionally ``budget = <int>``;
``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from .words import Expr

__all__ = ["parse_word", "WordFile", "parse_word_file"]

_TOKEN = re.compile(r"\s*(?:([(),])|([^\s(),=#]+))")
_OPS = {"comp", "side", "tensor", "id", "inv", "tau"}


def _tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at column {pos + 1}")
        out.append((m.group(1) or m.group(2), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()
    return out


def parse_word(text: str) -> Expr:
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty word")
    expr, i = _parse(toks, 0)
    if i != len(toks):
        raise ParseError(f"trailing input at column {toks[i][1] + 1}")
    return expr


def _parse(toks, i):
    if i >= len(toks):
        raise ParseError("unexpected end of word")
    tok, col = toks[i]
    if tok in "(),":
        raise ParseError(f"unexpected {tok!r} at column {col + 1}")
    if i + 1 < len(toks) and toks[i + 1][0] == "(":
        if tok not in _OPS:
            raise ParseError(f"unknown operator {tok!r} at column {col + 1}")
        args = []
        i += 2
        if i < len(toks) and toks[i][0] == ")":
            return Expr(tok, ()), i + 1
        while True:
            arg, i = _parse(toks, i)
            args.append(arg)
            if i >= len(toks):
                raise ParseError("missing ')'")
            if toks[i][0] == ",":
                i += 1
                continue
            if toks[i][0] == ")":
                return Expr(tok, tuple(args)), i + 1
            raise ParseError(f"expected ',' or ')' at column {toks[i][1] + 1}")
    return Expr("name", (), tok), i + 1


@dataclass(frozen=True)
class WordFile:
    lhs: Expr
    rhs: Expr
    budget: int | None = None


def parse_word_file(text: str) -> WordFile:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        key = key.strip()
        if not eq or key not in ("lhs", "rhs", "budget"):
            raise ParseError(f"line {lineno}: expected 'lhs = ...', 'rhs = ...' or 'budget = N'")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate {key}")
        if key == "budget":
            try:
                fields[key] = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: budget must be an integer") from None
        else:
            try:
                fields[key] = parse_word(value)
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
    for key in ("lhs", "rhs"):
        if key not in fields:
            raise ParseError(f"missing '{key} = ...' line")
    return WordFile(fields["lhs"], fields["rhs"], fields.get("budget"))
