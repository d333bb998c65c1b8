"""The commutative monoid of sprig sums under indistinguishability.

Every sum of sprigs collapses, up to indistinguishability in the dicot
universe, to a word built from one involutive generator ``a`` (the bare
star) and one invertible generator ``k[v]`` per positive dyadic value v
(the sprig of that value; its inverse is the mirrored sprig).  Words are
stored additively as exponent maps, so the defining relations ``a*a = e``
and ``k[v]*k[v]^-1 = e`` are applied by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dyadic import Dyadic
from .games import Outcome
from .positions import SprigSum, misere_outcome_closed, reduce


@dataclass(frozen=True)
class MonoidWord:
    """A fully reduced word: a star exponent mod 2 plus nonzero signed
    exponents on positive-value generators, keyed in ascending value order."""

    alpha: int
    exponents: tuple[tuple[Dyadic, int], ...]

    def __post_init__(self):
        if self.alpha not in (0, 1):
            raise ValueError("alpha exponent must be 0 or 1")
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents)))
        for value, exp in self.exponents:
            if value.num <= 0:
                raise ValueError("generator values must be strictly positive")
            if exp == 0:
                raise ValueError("zero exponents must be dropped")


IDENTITY = MonoidWord(0, ())
ALPHA = MonoidWord(1, ())


def kappa(value: Dyadic, exp: int = 1) -> MonoidWord:
    return MonoidWord(0, ((value, exp),))


def _from_exponents(alpha: int, items: Iterable[tuple[Dyadic, int]]) -> MonoidWord:
    acc: dict[Dyadic, int] = {}
    for value, exp in items:
        acc[value] = acc.get(value, 0) + exp
    return MonoidWord(alpha % 2, tuple((v, e) for v, e in acc.items() if e != 0))


def to_word(g: SprigSum) -> MonoidWord:
    """Map a sum of sprigs to its word: star parity to the alpha exponent,
    each value to its left-multiplicity minus right-multiplicity."""
    items = [(v, 1) for v in g.lefts] + [(v, -1) for v in g.rights]
    return _from_exponents(g.star, items)


def multiply(a: MonoidWord, b: MonoidWord) -> MonoidWord:
    """Commutative product: exponents add, the star exponents add mod 2."""
    return _from_exponents(a.alpha + b.alpha, a.exponents + b.exponents)


def word_to_sum(w: MonoidWord) -> SprigSum:
    """The reduced sum of sprigs a word denotes."""
    lefts, rights = [], []
    for value, exp in w.exponents:
        if exp > 0:
            lefts.extend([value] * exp)
        else:
            rights.extend([value] * -exp)
    return SprigSum(tuple(lefts), tuple(rights), w.alpha)


def word_outcome(w: MonoidWord) -> Outcome:
    """Misere outcome of the word; the lone previous-player-win word is ``a``."""
    return misere_outcome_closed(word_to_sum(w))


def words_equal(a: MonoidWord, b: MonoidWord) -> bool:
    """Structural equality of reduced words, which coincides with
    indistinguishability of the underlying sums over dicots."""
    return a == b


def render_word(w: MonoidWord) -> str:
    """Textual form: ``e``, ``a``, ``k[3/4]^2``, joined with dots."""
    parts = []
    if w.alpha:
        parts.append("a")
    for value, exp in w.exponents:
        if exp == 1:
            parts.append(f"k[{value}]")
        else:
            parts.append(f"k[{value}]^{exp}")
    return ".".join(parts) if parts else "e"
