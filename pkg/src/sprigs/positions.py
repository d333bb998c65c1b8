"""Sprig positions and sums of sprigs, with closed-form outcome rules.

A sprig is a Hackenbush string whose ground edge is green; its value is the
dyadic rational worth of the blue/red part, and the sprig plays like that
number grafted on top of a single green edge.  A sum of sprigs is captured
exactly by three pieces of data:

* the multiset of values of sprigs that favor Left (positive values),
* the multiset of magnitudes of sprigs that favor Right,
* a star parity bit for any bare green edges (value-0 sprigs fold in here,
  since a lone green edge just is the game star).

Two derived quantities decide every outcome question about such a sum:
``advantage`` (Left's surplus of sprigs) and ``edge`` (the gap between the
smallest surviving value on each side after conjugate pairs cancel).  The
classifiers below are closed forms over those two numbers; the brute-force
oracle in :mod:`sprigs.games` exists to check them, never to replace them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from . import games
from .dyadic import D_ZERO, Dyadic, number_options, number_to_game, string_to_value
from .games import Convention, Game, Outcome, add_all, ordinal_sum


class Player(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class NormalSign(Enum):
    """How a position compares with zero in normal play."""

    GREATER = "greater-than-0"
    EQUAL = "equal-0"
    CONFUSED = "confused-with-0"
    LESS = "less-than-0"


@dataclass(frozen=True, slots=True)
class Sprig:
    """A single sprig; the game is one green edge with the number on top."""

    value: Dyadic


def sprig_game(value: Dyadic | Sprig) -> Game:
    """The interned game tree of a sprig: star ordinally followed by the
    canonical game of its value."""
    if isinstance(value, Sprig):
        value = value.value
    return ordinal_sum(games.STAR, number_to_game(value))


def sprig_from_colors(colors: str) -> Sprig:
    """The sprig whose blue/red part reads ``colors`` bottom-up."""
    return Sprig(string_to_value(colors))


def literal_sprig_game(colors: str) -> Game:
    """The unsimplified tree of a sprig drawn edge by edge: a green edge
    (cuttable by both players, dropping everything) under the literal
    string tree of the colors."""
    from .dyadic import literal_string_game

    return ordinal_sum(games.STAR, literal_string_game(colors))


@dataclass(frozen=True)
class SprigSum:
    """A disjunctive sum of sprigs plus a star parity bit.

    ``lefts`` holds the values of positive sprigs, ``rights`` the magnitudes
    of negative ones; both are kept sorted.  All stored values are strictly
    positive: zero-value sprigs are star and belong in ``star``.
    """

    lefts: tuple[Dyadic, ...]
    rights: tuple[Dyadic, ...]
    star: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lefts", tuple(sorted(self.lefts)))
        object.__setattr__(self, "rights", tuple(sorted(self.rights)))
        if any(v <= D_ZERO for v in self.lefts + self.rights):
            raise ValueError("sprig multisets must hold strictly positive values")
        if self.star not in (0, 1):
            raise ValueError("star parity must be 0 or 1")

    @classmethod
    def from_signed(cls, values: Iterable[Dyadic], stars: int = 0) -> "SprigSum":
        """Build from signed sprig values; zeros and extra stars fold into
        the parity bit."""
        lefts, rights = [], []
        parity = stars
        for v in values:
            if v.num > 0:
                lefts.append(v)
            elif v.num < 0:
                rights.append(-v)
            else:
                parity += 1
        return cls(tuple(lefts), tuple(rights), parity % 2)

    def signed_values(self) -> list[Dyadic]:
        return list(self.lefts) + [-v for v in self.rights]

    def conjugate(self) -> "SprigSum":
        return SprigSum(self.rights, self.lefts, self.star)

    def with_star(self, star: int) -> "SprigSum":
        return SprigSum(self.lefts, self.rights, star)

    @property
    def sprig_count(self) -> int:
        return len(self.lefts) + len(self.rights)


EMPTY_SUM = SprigSum((), ())


def _multiset_difference(a: tuple, b: tuple) -> tuple:
    out = list(a)
    for v in b:
        try:
            out.remove(v)
        except ValueError:
            pass
    return tuple(out)


def reduce(g: SprigSum) -> SprigSum:
    """Cancel conjugate pairs: the two multisets lose their intersection
    (as multisets).  Idempotent; the star parity is untouched."""
    return SprigSum(
        _multiset_difference(g.lefts, g.rights),
        _multiset_difference(g.rights, g.lefts),
        g.star,
    )


def advantage(g: SprigSum) -> int:
    """Left's sprig surplus; the same before and after reduction."""
    return len(g.lefts) - len(g.rights)


def edge(g: SprigSum) -> Dyadic:
    """min of the reduced left values minus min of the reduced right values,
    or zero whenever either reduced side is empty."""
    r = reduce(g)
    if not r.lefts or not r.rights:
        return D_ZERO
    return r.lefts[0] - r.rights[0]


def to_game(g: SprigSum) -> Game:
    """The literal (interned, expanded) game tree of the sum."""
    parts = [sprig_game(v) for v in g.lefts]
    parts += [sprig_game(-v) for v in g.rights]
    if g.star:
        parts.append(games.STAR)
    return add_all(parts)


def misere_outcome_closed(g: SprigSum) -> Outcome:
    """Misere outcome of a sum of sprigs, straight from advantage and edge."""
    adv = advantage(g)
    if not g.star:
        if adv > 0:
            return Outcome.L
        if adv < 0:
            return Outcome.R
        return Outcome.N
    e = edge(g).sign
    if adv > 1:
        return Outcome.L
    if adv < -1:
        return Outcome.R
    if adv == 1:
        return Outcome.L if e > 0 else Outcome.N
    if adv == -1:
        return Outcome.R if e < 0 else Outcome.N
    if e > 0:
        return Outcome.L
    if e < 0:
        return Outcome.R
    r = reduce(g)
    assert not r.lefts and not r.rights, "advantage 0 with edge 0 must cancel fully"
    return Outcome.P


def normal_classification(g: SprigSum) -> NormalSign:
    """Where the sum sits relative to zero in normal play."""
    adv = advantage(g)
    if g.star:
        if adv >= 1:
            return NormalSign.GREATER
        if adv <= -1:
            return NormalSign.LESS
        return NormalSign.CONFUSED
    e = edge(g).sign
    if adv > 1:
        return NormalSign.GREATER
    if adv < -1:
        return NormalSign.LESS
    if adv == 1:
        return NormalSign.GREATER if e > 0 else NormalSign.CONFUSED
    if adv == -1:
        return NormalSign.LESS if e < 0 else NormalSign.CONFUSED
    if e > 0:
        return NormalSign.GREATER
    if e < 0:
        return NormalSign.LESS
    r = reduce(g)
    assert not r.lefts and not r.rights, "advantage 0 with edge 0 must cancel fully"
    return NormalSign.EQUAL


_SIGN_TO_OUTCOME = {
    NormalSign.GREATER: Outcome.L,
    NormalSign.EQUAL: Outcome.P,
    NormalSign.CONFUSED: Outcome.N,
    NormalSign.LESS: Outcome.R,
}


def normal_outcome_closed(g: SprigSum) -> Outcome:
    return _SIGN_TO_OUTCOME[normal_classification(g)]


def star_toggle_check(g: SprigSum) -> bool:
    """Verification hook: flipping the star bit must swap the normal and
    misere outcomes, in both directions."""
    flipped = g.with_star(1 - g.star)
    return (
        normal_outcome_closed(g) == misere_outcome_closed(flipped)
        and normal_outcome_closed(flipped) == misere_outcome_closed(g)
    )


# -- moves ------------------------------------------------------------------

_REMOVE = "remove"
_SLIDE = "slide"
_STAR = "star"


@dataclass(frozen=True)
class Move:
    """One legal move in a sum of sprigs, at the value level."""

    position: SprigSum  # what is left after the move
    kind: str  # "remove" (chop a green edge), "slide" (play in a number part), "star"
    sprig: Optional[Dyadic] = None  # signed value of the sprig played in
    new_value: Optional[Dyadic] = None  # signed value it became, for slides

    @property
    def description(self) -> str:
        if self.kind == _STAR:
            return "take * to 0"
        if self.kind == _REMOVE:
            return f"take sprig *:{self.sprig} to 0"
        if self.new_value is None or self.new_value.num == 0:
            return f"play sprig *:{self.sprig} down to *"
        return f"play sprig *:{self.sprig} to *:{self.new_value}"


def _after_remove(g: SprigSum, value: Dyadic, side: str) -> SprigSum:
    if side == "left":
        return SprigSum(_multiset_difference(g.lefts, (value,)), g.rights, g.star)
    return SprigSum(g.lefts, _multiset_difference(g.rights, (value,)), g.star)


def _after_slide(g: SprigSum, value: Dyadic, side: str, new_signed: Dyadic) -> SprigSum:
    signed = list(SprigSum(
        _multiset_difference(g.lefts, (value,)) if side == "left" else g.lefts,
        _multiset_difference(g.rights, (value,)) if side == "right" else g.rights,
        0,
    ).signed_values())
    signed.append(new_signed)
    return SprigSum.from_signed(signed, g.star)


def legal_moves(g: SprigSum, mover: Player) -> list[Move]:
    """Every move the player has, in a fixed deterministic order: sprig
    removals (opponent's side then own, smallest value first), the star
    move, then number-part slides (Left's side first, smallest value first).

    Distinct copies of equal sprigs give the same move and appear once.
    """
    left_mover = mover is Player.LEFT
    own_side, opp_side = ("left", "right") if left_mover else ("right", "left")
    own_vals, opp_vals = (g.lefts, g.rights) if left_mover else (g.rights, g.lefts)

    moves: list[Move] = []
    for v in sorted(set(opp_vals)):
        signed = -v if left_mover else v
        moves.append(Move(_after_remove(g, v, opp_side), _REMOVE, signed))
    for v in sorted(set(own_vals)):
        signed = v if left_mover else -v
        moves.append(Move(_after_remove(g, v, own_side), _REMOVE, signed))
    if g.star:
        moves.append(Move(g.with_star(0), _STAR))

    def slide(values, side, pick):
        for v in sorted(set(values)):
            signed = v if side == "left" else -v
            option = pick(signed)
            if option is not None:
                moves.append(Move(_after_slide(g, v, side, option), _SLIDE, signed, option))

    def left_option(signed: Dyadic) -> Optional[Dyadic]:
        return number_options(signed)[0]

    def right_option(signed: Dyadic) -> Optional[Dyadic]:
        return number_options(signed)[1]

    pick = left_option if left_mover else right_option
    slide(g.lefts, "left", pick)
    slide(g.rights, "right", pick)
    return moves


def _mover_wins_next(position: SprigSum, opponent: Player) -> bool:
    """True if the opponent, moving next in this position, loses."""
    out = misere_outcome_closed(position)
    if opponent is Player.LEFT:
        return out in (Outcome.P, Outcome.R)
    return out in (Outcome.P, Outcome.L)


def best_move(g: SprigSum, mover: Player) -> Optional[Move]:
    """A provably optimal misere move, or None when there is no move at all
    (an empty sum: under misere the player to move then simply wins).

    When the mover can win the move is chosen by the winning constructions:
    with the star present and the mover ahead on sprigs, take the star;
    otherwise prefer chopping an opponent sprig, then an own sprig, then a
    number-part slide, smallest values first.  A mover who is lost gets the
    principled best try: chop the opponent's strongest surviving sprig.
    """
    moves = legal_moves(g, mover)
    if not moves:
        return None

    out = misere_outcome_closed(g)
    wins = out in ((Outcome.L, Outcome.N) if mover is Player.LEFT else (Outcome.R, Outcome.N))

    if wins:
        mover_adv = advantage(g) if mover is Player.LEFT else -advantage(g)
        if g.star and mover_adv > 0:
            star = next(m for m in moves if m.kind == _STAR)
            if _mover_wins_next(star.position, mover.opponent):
                return star
        for m in moves:
            if _mover_wins_next(m.position, mover.opponent):
                return m
        raise AssertionError(f"no winning move found in winnable position {g}")

    reduced = reduce(g)
    opp_vals = reduced.rights if mover is Player.LEFT else reduced.lefts
    if not opp_vals:
        opp_vals = g.rights if mover is Player.LEFT else g.lefts
    if opp_vals:
        target = max(opp_vals)
        signed = -target if mover is Player.LEFT else target
        return next(m for m in moves if m.kind == _REMOVE and m.sprig == signed)
    if g.star:
        return next(m for m in moves if m.kind == _STAR)
    return moves[0]
