"""Immutable partizan game trees with exact outcome evaluation.

Trees are interned: :func:`make_game` returns the one canonical object for
each structurally distinct tree, so identity *is* structural equality and
every cache in this module can key directly on the node.  Option tuples are
stored sorted by interning id, which makes the interning key exact and
independent of the order options were supplied in.

All shared state lives in module-level tables.  Reads are safe from any
thread; inserts go through ``dict.setdefault`` so racing constructions of
the same tree deduplicate to a single winner.  Games are never mutated
after construction (the two outcome slots are write-once memo fields).
"""

from __future__ import annotations

from enum import Enum
from operator import attrgetter
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceededError

DEFAULT_NODE_BUDGET = 10_000_000

_node_budget = DEFAULT_NODE_BUDGET


class Convention(Enum):
    """Play convention: what happens to the player who cannot move."""

    NORMAL = "normal"  # unable to move: you lose
    MISERE = "misere"  # unable to move: you win


class Outcome(Enum):
    """Who wins under optimal play: Left, Right, the Next or the Previous player.

    Partially ordered (better for Left upward): R below N and P, N and P
    incomparable, L on top.
    """

    L = "L"
    R = "R"
    N = "N"
    P = "P"

    def conjugate(self) -> "Outcome":
        """The outcome with the players' roles swapped (L and R trade, N and P fix)."""
        if self is Outcome.L:
            return Outcome.R
        if self is Outcome.R:
            return Outcome.L
        return self

    def geq(self, other: "Outcome") -> bool:
        """True if this outcome is at least as good for Left as ``other``."""
        return self is other or self is Outcome.L or other is Outcome.R


class Game:
    """An interned, immutable game tree.

    Do not instantiate directly; use :func:`make_game` so that structurally
    equal trees share one object.  ``left`` and ``right`` are tuples of
    option Games sorted by id.  Hashing and equality are by identity.
    """

    __slots__ = ("left", "right", "id", "_nor", "_mis")

    def __init__(self, left: tuple, right: tuple, ident: int):
        self.left = left
        self.right = right
        self.id = ident
        self._nor: Optional[int] = None  # first-player-win bits, normal play
        self._mis: Optional[int] = None  # first-player-win bits, misere play

    def __hash__(self) -> int:
        return self.id

    def __repr__(self) -> str:
        return brace(self, limit=40)


_intern: dict = {}
_id_key = attrgetter("id")


def _canonical_options(options: Iterable[Game]) -> tuple:
    return tuple(sorted(set(options), key=_id_key))


def make_game(lefts: Iterable[Game] = (), rights: Iterable[Game] = ()) -> Game:
    """Intern and return the game with the given Left and Right option sets.

    Duplicates and ordering in the inputs are irrelevant.  Raises
    :class:`BudgetExceededError` once the interning table reaches the node
    budget (see :func:`set_node_budget`).
    """
    key = (_canonical_options(lefts), _canonical_options(rights))
    g = _intern.get(key)
    if g is not None:
        return g
    if len(_intern) >= _node_budget:
        raise BudgetExceededError(
            f"interned game nodes exceed the budget of {_node_budget}"
        )
    g = Game(key[0], key[1], len(_intern))
    return _intern.setdefault(key, g)


def interned_count() -> int:
    """Number of distinct game trees currently interned."""
    return len(_intern)


def set_node_budget(budget: int) -> None:
    """Cap the interning table; constructions past the cap raise BudgetExceededError."""
    global _node_budget
    if budget < len(_intern):
        raise ValueError("budget below current interned count")
    _node_budget = budget


ZERO = make_game()
STAR = make_game((ZERO,), (ZERO,))


def brace(g: Game, limit: int = 200) -> str:
    """Render a tree in {L|R} notation, abbreviating 0 and * and capping size."""
    if g is ZERO:
        return "0"
    if g is STAR:
        return "*"
    if limit <= 0:
        return "..."
    per = max(1, limit // max(1, len(g.left) + len(g.right)) - 1)
    lefts = ",".join(brace(o, per) for o in g.left)
    rights = ",".join(brace(o, per) for o in g.right)
    return "{%s|%s}" % (lefts, rights)


_conj: dict = {ZERO: ZERO, STAR: STAR}


def conjugate(g: Game) -> Game:
    """The game with Left and Right swapped throughout (an involution)."""
    r = _conj.get(g)
    if r is None:
        r = make_game(
            tuple(conjugate(o) for o in g.right),
            tuple(conjugate(o) for o in g.left),
        )
        _conj[g] = r
        _conj[r] = g
    return r


_sum: dict = {}


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum: move in exactly one component.

    Commutative and associative at the tree level thanks to interning and
    canonically sorted option sets.
    """
    if g.id > h.id:
        g, h = h, g
    if g is ZERO:
        return h
    key = (g.id, h.id)
    r = _sum.get(key)
    if r is None:
        r = make_game(
            [add(o, h) for o in g.left] + [add(g, o) for o in h.left],
            [add(o, h) for o in g.right] + [add(g, o) for o in h.right],
        )
        _sum[key] = r
    return r


def add_all(games: Iterable[Game]) -> Game:
    total = ZERO
    for g in games:
        total = add(total, g)
    return total


_osum: dict = {}


def ordinal_sum(base: Game, dependent: Game) -> Game:
    """Ordinal sum: play in the base or the dependent, but any move in the
    base discards the dependent entirely."""
    if dependent is ZERO:
        return base
    key = (base.id, dependent.id)
    r = _osum.get(key)
    if r is None:
        r = make_game(
            base.left + tuple(ordinal_sum(base, o) for o in dependent.left),
            base.right + tuple(ordinal_sum(base, o) for o in dependent.right),
        )
        _osum[key] = r
    return r


_nim: list = [ZERO, STAR]


def nim_heap(n: int) -> Game:
    """The heap of n green edges: options 0, *, ..., heap(n-1) for both players."""
    if n < 0:
        raise ValueError("heap size must be non-negative")
    while len(_nim) <= n:
        opts = tuple(_nim)
        _nim.append(make_game(opts, opts))
    return _nim[n]


def _solve(g: Game, misere: bool) -> int:
    """First-player-win bits for g: bit 0 set if Left moving first wins,
    bit 1 set if Right moving first wins."""
    bits = g._mis if misere else g._nor
    if bits is not None:
        return bits
    if g.left:
        lf = 0
        for o in g.left:
            if not _solve(o, misere) & 2:
                lf = 1
                break
    else:
        lf = 1 if misere else 0
    if g.right:
        rf = 0
        for o in g.right:
            if not _solve(o, misere) & 1:
                rf = 2
                break
    else:
        rf = 2 if misere else 0
    bits = lf | rf
    if misere:
        g._mis = bits
    else:
        g._nor = bits
    return bits


_OUTCOME_OF_BITS = {0: Outcome.P, 1: Outcome.L, 2: Outcome.R, 3: Outcome.N}


def outcome(g: Game, convention: Convention) -> Outcome:
    """Exact outcome class of g under the given convention (memoized search)."""
    return _OUTCOME_OF_BITS[_solve(g, convention is Convention.MISERE)]


def left_first_wins(g: Game, convention: Convention) -> bool:
    return bool(_solve(g, convention is Convention.MISERE) & 1)


def right_first_wins(g: Game, convention: Convention) -> bool:
    return bool(_solve(g, convention is Convention.MISERE) & 2)


def normal_geq(g: Game, h: Game) -> bool:
    """G >= H in normal play: Right moving first cannot win G + (-H)."""
    return not _solve(add(g, conjugate(h)), False) & 2


def normal_eq(g: Game, h: Game) -> bool:
    return normal_geq(g, h) and normal_geq(h, g)


_canon: dict = {ZERO: ZERO}

_CANON_PASS_CAP = 10_000


def normal_canonical_form(g: Game) -> Game:
    """The unique smallest game normal-equal to g.

    Options are canonicalized recursively; then reversible options are
    bypassed until none remain and dominated options are dropped.  Since all
    surviving options are themselves canonical, two distinct options are
    never normal-equal, so domination comparisons are unambiguous.
    """
    r = _canon.get(g)
    if r is not None:
        return r
    left = {normal_canonical_form(o) for o in g.left}
    right = {normal_canonical_form(o) for o in g.right}

    # Bypass reversible options.  A Left option is reversible if it has a
    # Right option <= g; it gets replaced by that option's Left options.
    changed = True
    passes = 0
    while changed:
        passes += 1
        if passes > _CANON_PASS_CAP:
            raise RuntimeError("canonical form failed to stabilize")
        changed = False
        for opt in list(left):
            rev = next((lr for lr in opt.right if normal_geq(g, lr)), None)
            if rev is not None:
                left.discard(opt)
                left.update(rev.left)
                changed = True
        for opt in list(right):
            rev = next((rl for rl in opt.left if normal_geq(rl, g)), None)
            if rev is not None:
                right.discard(opt)
                right.update(rev.right)
                changed = True

    # Drop dominated options (Left keeps maximal ones, Right keeps minimal).
    keep_left = [a for a in left if not any(b is not a and normal_geq(b, a) for b in left)]
    keep_right = [a for a in right if not any(b is not a and normal_geq(a, b) for b in right)]

    r = make_game(keep_left, keep_right)
    _canon[g] = r
    _canon[r] = r
    return r


def subpositions(g: Game) -> Iterator[Game]:
    """Every position reachable from g by any sequence of moves, g included."""
    seen = {g}
    stack = [g]
    while stack:
        cur = stack.pop()
        yield cur
        for o in cur.left + cur.right:
            if o not in seen:
                seen.add(o)
                stack.append(o)
