"""Position notation: parsing and rendering.

Grammar (whitespace between tokens is insignificant)::

    sum    := term ('+' term)*
    term   := '0' | '*' | 'g' color* | '*:' dyadic | '*' INT
    color  := 'B' | 'R'
    dyadic := ['-'] INT [ '/' INT ]     (denominator must be a power of two)

``g`` introduces a sprig drawn as colors bottom-up (a bare ``g`` is one
green edge, the game star); ``*:v`` gives a sprig by its value directly;
``*N`` is a heap of N green edges, accepted for oracle experiments only.
``0`` is the empty position.  The color letters are attached to the ``g``
with no intervening space.

Sums containing only sprig and star terms parse to a :class:`SprigSum`;
anything with a heap term parses to a literal :class:`Game`, which the
closed-form classifiers refuse.
"""

from __future__ import annotations

from typing import Union

from . import games
from .dyadic import Dyadic, parse_dyadic, string_to_value
from .errors import ParseError
from .games import Game, add_all, nim_heap
from .positions import SprigSum, sprig_game


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)


def _scan_int(sc: _Scanner) -> int:
    start = sc.pos
    while sc.peek().isdigit():
        sc.pos += 1
    if sc.pos == start:
        raise sc.error("expected digits")
    return int(sc.text[start : sc.pos])


def _scan_dyadic(sc: _Scanner) -> Dyadic:
    start = sc.pos
    if sc.peek() == "-":
        sc.pos += 1
    num = _scan_int(sc)
    if sc.peek() == "/":
        sc.pos += 1
        den_start = sc.pos
        den = _scan_int(sc)
        if den <= 0 or den & (den - 1):
            sc.pos = den_start
            raise sc.error(f"denominator {den} is not a power of two")
        value = Dyadic(num, den.bit_length() - 1)
    else:
        value = Dyadic(num)
    if sc.text[start] == "-":
        value = -value
    return value


def _scan_term(sc: _Scanner) -> tuple[str, object]:
    """Returns one of ('zero', None), ('star', None), ('sprig', Dyadic),
    ('heap', int)."""
    c = sc.peek()
    if c == "0":
        sc.take()
        return "zero", None
    if c == "*":
        sc.take()
        sc.skip_ws()
        if sc.peek() == ":":
            sc.take()
            sc.skip_ws()
            return "sprig", _scan_dyadic(sc)
        if sc.peek().isdigit():
            return "heap", _scan_int(sc)
        return "star", None
    if c == "g":
        sc.take()
        colors_start = sc.pos
        while sc.peek() in ("B", "R"):
            sc.pos += 1
        if sc.peek() == "L":
            raise sc.error("color 'L' is not supported; write 'B' for blue")
        return "sprig", string_to_value(sc.text[colors_start : sc.pos])
    if c == "":
        raise sc.error("expected a term")
    raise sc.error(f"unexpected character {c!r}")


def parse_position(text: str) -> Union[SprigSum, Game]:
    """Parse position text to a SprigSum, or to a literal Game when heap
    terms make the position unclassifiable in closed form."""
    sc = _Scanner(text)
    terms = []
    sc.skip_ws()
    while True:
        terms.append(_scan_term(sc))
        sc.skip_ws()
        if sc.peek() == "+":
            sc.take()
            sc.skip_ws()
            continue
        if sc.peek() == "":
            break
        raise sc.error(f"unexpected character {sc.peek()!r}")

    if any(kind == "heap" for kind, _ in terms):
        parts = []
        for kind, payload in terms:
            if kind == "sprig":
                parts.append(sprig_game(payload))
            elif kind == "star":
                parts.append(games.STAR)
            elif kind == "heap":
                parts.append(nim_heap(payload))
        return add_all(parts)

    values = [payload for kind, payload in terms if kind == "sprig"]
    stars = sum(1 for kind, _ in terms if kind == "star")
    return SprigSum.from_signed(values, stars)


def render_position(g: Union[SprigSum, Game]) -> str:
    """Grammar text for a sprig sum ('0' when empty); brace notation for a
    raw game, which the grammar cannot express in general."""
    if isinstance(g, Game):
        return games.brace(g)
    parts = [f"*:{v}" for v in g.lefts]
    parts += [f"*:{-v}" for v in g.rights]
    if g.star:
        parts.append("*")
    return " + ".join(parts) if parts else "0"
