"""Exact dyadic rationals, blue/red color strings, and number games.

A color string is the red-blue part of a sprig read bottom (nearest the
ground) first, written with the letters ``B`` and ``R``.  Every such string
evaluates, under normal play, to a dyadic rational; the fold in
:func:`string_to_value` computes it in linear time by tracking the interval
the remaining choice must fall in and applying the simplicity rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import games
from .games import Game, make_game

BLUE = "B"
RED = "R"


@dataclass(frozen=True, slots=True)
class Dyadic:
    """A reduced dyadic rational num / 2**exp.

    Reduced means exp == 0 or num is odd; the constructor normalizes.
    Arbitrary-precision throughout, so long verification sweeps cannot
    overflow.
    """

    num: int
    exp: int = 0

    def __post_init__(self):
        num, exp = self.num, self.exp
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    # -- ordering and arithmetic (exact, no rounding anywhere) --

    def __lt__(self, other: "Dyadic") -> bool:
        return self.num << other.exp < other.num << self.exp

    def __le__(self, other: "Dyadic") -> bool:
        return self.num << other.exp <= other.num << self.exp

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return other <= self

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    @property
    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    @property
    def is_integer(self) -> bool:
        return self.exp == 0

    def floor(self) -> int:
        return self.num >> self.exp

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"


D_ZERO = Dyadic(0)
D_ONE = Dyadic(1)


def compare(a: Dyadic, b: Dyadic) -> int:
    """-1, 0 or 1 as a is below, equal to, or above b."""
    lhs = a.num << b.exp
    rhs = b.num << a.exp
    return (lhs > rhs) - (lhs < rhs)


def parse_dyadic(text: str) -> Dyadic:
    """Parse the textual format: integers as "n", fractions as "p/q" with q a
    power of two ("3/4", "-1/2").  Rejects any other denominator."""
    text = text.strip()
    if "/" in text:
        num_text, _, den_text = text.partition("/")
        num = int(num_text)
        den = int(den_text)
        if den <= 0 or den & (den - 1):
            raise ValueError(f"denominator {den} is not a power of two")
        return Dyadic(num, den.bit_length() - 1)
    return Dyadic(int(text))


def simplest_between(lo: Optional[Dyadic], hi: Optional[Dyadic]) -> Dyadic:
    """The unique earliest-born number strictly between lo and hi.

    ``None`` bounds mean minus/plus infinity.  If an integer fits, the one
    of least absolute value is earliest; otherwise the unique dyadic with
    the smallest power-of-two denominator fits.
    """
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError(f"empty interval: [{lo}, {hi}]")
    if lo is None and hi is None:
        return D_ZERO
    if lo is None:
        if hi > D_ZERO:
            return D_ZERO
        return Dyadic(-((-hi.num) >> hi.exp) - 1)  # greatest integer < hi
    if hi is None:
        if lo < D_ZERO:
            return D_ZERO
        return Dyadic((lo.num >> lo.exp) + 1)  # least integer > lo
    n = (lo.num >> lo.exp) + 1  # least integer > lo
    if Dyadic(n) < hi:
        if lo < D_ZERO and hi > D_ZERO:
            return D_ZERO
        if lo >= D_ZERO:
            return Dyadic(n)
        return Dyadic(-((-hi.num) >> hi.exp) - 1)
    q = 1
    while True:
        # least multiple of 1/2^q strictly above lo
        k = ((lo.num << q) >> lo.exp) + 1
        if k << hi.exp < hi.num << q:
            assert k % 2 == 1, "minimal-denominator candidate must be odd"
            return Dyadic(k, q)
        q += 1


def validate_colors(s: str) -> None:
    for i, c in enumerate(s):
        if c not in (BLUE, RED):
            raise ValueError(f"invalid color {c!r} at index {i}; use 'B' or 'R'")


def string_to_value(s: str) -> Dyadic:
    """Normal-play value of a blue/red string, bottom edge first.

    Fold each edge into a shrinking interval: a blue edge pins the lower
    bound at the current value, a red edge the upper bound, and the value
    becomes the simplest number inside the new interval.
    """
    validate_colors(s)
    lo: Optional[Dyadic] = None
    hi: Optional[Dyadic] = None
    value = D_ZERO
    for c in s:
        if c == BLUE:
            lo = value
        else:
            hi = value
        value = simplest_between(lo, hi)
    return value


def value_to_string(x: Dyadic) -> str:
    """The unique color string evaluating to x (inverse of string_to_value)."""
    lo: Optional[Dyadic] = None
    hi: Optional[Dyadic] = None
    value = D_ZERO
    out = []
    while value != x:
        if x > value:
            out.append(BLUE)
            lo = value
        else:
            out.append(RED)
            hi = value
        value = simplest_between(lo, hi)
    return "".join(out)


def number_options(x: Dyadic) -> tuple[Optional[Dyadic], Optional[Dyadic]]:
    """Canonical Left and Right option values of the number x (None if absent).

    Zero has neither; a positive integer n has only n-1 on the left; a
    non-integer with odd numerator 2p+1 over 2^q has p/2^(q-1) and
    (p+1)/2^(q-1).
    """
    if x.exp == 0:
        if x.num == 0:
            return None, None
        if x.num > 0:
            return Dyadic(x.num - 1), None
        return None, Dyadic(x.num + 1)
    p = (x.num - 1) // 2
    return Dyadic(p, x.exp - 1), Dyadic(p + 1, x.exp - 1)


_number_games: dict = {D_ZERO: games.ZERO}


def number_to_game(x: Dyadic) -> Game:
    """The canonical-form game of the number x."""
    g = _number_games.get(x)
    if g is None:
        left, right = number_options(x)
        g = make_game(
            () if left is None else (number_to_game(left),),
            () if right is None else (number_to_game(right),),
        )
        _number_games[x] = g
    return g


def literal_string_game(s: str) -> Game:
    """The unsimplified game tree of a blue/red string: cutting edge i keeps
    the prefix below it, blue edges are Left's, red edges are Right's."""
    validate_colors(s)
    prefixes = [games.ZERO]
    for i in range(1, len(s) + 1):
        prefix = s[:i]
        prefixes.append(
            make_game(
                [prefixes[j] for j in range(i) if prefix[j] == BLUE],
                [prefixes[j] for j in range(i) if prefix[j] == RED],
            )
        )
    return prefixes[-1]


def color_strings(max_len: int) -> list[str]:
    """All color strings of length <= max_len, ordered by length then lexicon."""
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [s + c for s in frontier for c in (BLUE, RED)]
        out.extend(frontier)
    return out
