"""Bounded-universe verification: finite context sets and refutation search.

Misere equivalence quantifies over an infinite universe, so nothing here
proves equivalence.  What the searches deliver is either a concrete witness
(a context whose presence separates two games, which *is* a proof of
inequivalence) or the report "indistinguishable over these N contexts".
Callers must keep that asymmetry in mind.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from . import games
from .dyadic import Dyadic, color_strings, string_to_value
from .errors import BudgetExceededError
from .games import Convention, Game, Outcome, add, brace, conjugate, make_game, outcome, subpositions
from .positions import SprigSum, to_game

DEFAULT_DICOT_BIRTHDAY_CAP = 3


@dataclass(frozen=True)
class ContextSet:
    """An explicitly enumerated, deterministically ordered set of games.

    ``labels`` aligns with ``games``: grammar text where the context came
    from a sprig sum, brace notation otherwise.  Very large sets skip the
    precomputed labels and render on demand.
    """

    descriptor: str
    games: tuple[Game, ...]
    labels: Optional[tuple[str, ...]] = None

    def __len__(self) -> int:
        return len(self.games)

    def label_of(self, g: Game) -> str:
        if self.labels is not None:
            try:
                return self.labels[self.games.index(g)]
            except ValueError:
                pass
        return brace(g)


_dicot_memo: dict = {games.ZERO: True}


def is_dicot(g: Game) -> bool:
    """True if every subposition gives both players a move or neither."""
    r = _dicot_memo.get(g)
    if r is None:
        if bool(g.left) != bool(g.right):
            r = False
        else:
            r = all(is_dicot(o) for o in g.left) and all(is_dicot(o) for o in g.right)
        _dicot_memo[g] = r
    return r


def _nonempty_subsets(items: list) -> list[tuple]:
    out = []
    n = len(items)
    for mask in range(1, 1 << n):
        out.append(tuple(items[i] for i in range(n) if mask >> i & 1))
    return out


_dicot_sets: dict[int, tuple] = {}


def enumerate_dicots(birthday: int, cap: int = DEFAULT_DICOT_BIRTHDAY_CAP) -> ContextSet:
    """All structurally distinct dicot trees born by the given day.

    Grows doubly exponentially; days past the cap raise
    :class:`BudgetExceededError` rather than start a hopeless enumeration.
    """
    if birthday > cap:
        raise BudgetExceededError(
            f"dicot enumeration at birthday {birthday} exceeds the cap of {cap}"
        )
    if birthday not in _dicot_sets:
        known = [games.ZERO]
        seen = {games.ZERO}
        for _ in range(birthday):
            subsets = _nonempty_subsets(known)
            for lefts in subsets:
                for rights in subsets:
                    g = make_game(lefts, rights)
                    if g not in seen:
                        seen.add(g)
                        known.append(g)
        _dicot_sets[birthday] = tuple(known)
    members = _dicot_sets[birthday]
    labels = tuple(brace(g) for g in members) if len(members) <= 20_000 else None
    return ContextSet(f"dicots born by day <= {birthday}", members, labels)


def sprig_sum_values(max_len: int) -> list[Dyadic]:
    """Distinct strictly positive sprig values realizable by color strings
    of the given length, ascending.  (String values come in mirror pairs,
    so the negatives are exactly the mirrors of these.)"""
    values = {string_to_value(s) for s in color_strings(max_len)}
    return sorted(v for v in values if v.num > 0)


def sprig_sum_contexts(max_sprigs: int, max_len: int, optional_star: bool = True) -> ContextSet:
    """All sums of at most ``max_sprigs`` sprigs with values drawn from
    strings of length at most ``max_len``, each optionally plus star."""
    from .grammar import render_position

    positives = sprig_sum_values(max_len)
    values = sorted([-v for v in positives] + positives)
    members: list[Game] = []
    labels: list[str] = []
    for k in range(max_sprigs + 1):
        for combo in combinations_with_replacement(values, k):
            for star in (0, 1) if optional_star else (0,):
                s = SprigSum.from_signed(combo, star)
                members.append(to_game(s))
                labels.append(render_position(s))
    return ContextSet(
        f"sums of <= {max_sprigs} sprigs of length <= {max_len}, plus optional *",
        tuple(members),
        tuple(labels),
    )


def default_contexts(max_sprigs: int = 3, max_len: int = 3, birthday: int = 2) -> ContextSet:
    """The standard verification context: small sprig sums union small dicots."""
    sprig_ctx = sprig_sum_contexts(max_sprigs, max_len)
    dicot_ctx = enumerate_dicots(birthday)
    members = list(sprig_ctx.games)
    labels = list(sprig_ctx.labels)
    seen = set(members)
    for g in dicot_ctx.games:
        if g not in seen:
            seen.add(g)
            members.append(g)
            labels.append(dicot_ctx.label_of(g))
    return ContextSet(
        f"{sprig_ctx.descriptor}, union {dicot_ctx.descriptor}",
        tuple(members),
        tuple(labels),
    )


def distinguish(g: Game, h: Game, ctx: ContextSet) -> Optional[Game]:
    """First context (in canonical order) whose addition separates the
    misere outcomes of g and h, or None if the whole set fails to."""
    if g is h:
        return None
    for x in ctx.games:
        if outcome(add(g, x), Convention.MISERE) is not outcome(add(h, x), Convention.MISERE):
            return x
    return None


def equiv_zero_witness(g: Game, ctx: ContextSet) -> Optional[Game]:
    """First context x with o-(g + x) different from o-(x), or None."""
    for x in ctx.games:
        if outcome(add(g, x), Convention.MISERE) is not outcome(x, Convention.MISERE):
            return x
    return None


def verify_equiv_zero(g: Game, ctx: ContextSet) -> bool:
    """True if adding g never changes a misere outcome across the context
    set.  Evidence, not proof, of equivalence to zero."""
    return equiv_zero_witness(g, ctx) is None


def check_ngame_hypothesis(g: Game) -> bool:
    """True if h plus its conjugate is a misere first-player win for every
    position h reachable from g (g itself included)."""
    return all(
        outcome(add(h, conjugate(h)), Convention.MISERE) is Outcome.N
        for h in subpositions(g)
    )


def refute_geq(g: Game, h: Game, ctx: ContextSet) -> Optional[Game]:
    """First context x where o-(g + x) fails to be at least o-(h + x) in the
    outcome partial order (incomparable counts as a failure), or None."""
    if g is h:
        return None
    for x in ctx.games:
        if not outcome(add(g, x), Convention.MISERE).geq(outcome(add(h, x), Convention.MISERE)):
            return x
    return None
