"""Verification sweeps: every closed-form claim checked against brute force.

Each suite runs one family of checks at configurable caps and returns a
:class:`SuiteResult` whose checks either all pass or carry the first
witness found.  The sweeps are deliberately exhaustive over their stated
families; nothing is sampled unless the full family is astronomically
large (see :func:`suite_starcolon`).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator, Optional

from . import games, monoid
from .dyadic import Dyadic, color_strings, number_to_game, string_to_value
from .games import (
    Convention,
    Outcome,
    add,
    brace,
    conjugate,
    left_first_wins,
    make_game,
    normal_canonical_form,
    normal_geq,
    ordinal_sum,
    outcome,
    right_first_wins,
)
from .grammar import render_position
from .positions import (
    NormalSign,
    Player,
    SprigSum,
    advantage,
    best_move,
    edge,
    legal_moves,
    literal_sprig_game,
    misere_outcome_closed,
    normal_classification,
    normal_outcome_closed,
    reduce,
    sprig_game,
    star_toggle_check,
    to_game,
)
from .universe import (
    ContextSet,
    check_ngame_hypothesis,
    default_contexts,
    distinguish,
    enumerate_dicots,
    equiv_zero_witness,
    refute_geq,
    sprig_sum_values,
)

SUITE_NAMES = (
    "starcolon",
    "equivzero",
    "ordering",
    "canonical",
    "outcomes",
    "toggle",
    "monoid",
)

MISERE = Convention.MISERE
NORMAL = Convention.NORMAL


@dataclass
class Caps:
    """Sweep sizes.  Family caps cover the positions being classified;
    ctx_* caps shape the verification context set."""

    sprigs: int = 3
    length: int = 4
    ctx_sprigs: int = 3
    ctx_len: int = 3
    ctx_birthday: int = 2
    birthday: int = 3
    samples: int = 10_000
    seed: int = 2718281
    monoid_sums: int = 1000
    monoid_pairs: int = 100


@dataclass
class Check:
    claim: str
    description: str
    checked: int
    passed: bool
    witness: Optional[str] = None


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def total_checked(self) -> int:
        return sum(c.checked for c in self.checks)

    def add(self, claim: str, description: str, checked: int, witness: Optional[str]) -> None:
        self.checks.append(Check(claim, description, checked, witness is None, witness))


def sprig_sum_family(
    max_sprigs: int, max_len: int, stars: tuple[int, ...] = (0, 1)
) -> Iterator[SprigSum]:
    """Every sum of at most max_sprigs sprigs whose values come from color
    strings of length at most max_len, for each requested star parity."""
    positives = sprig_sum_values(max_len)
    signed = sorted([-v for v in positives] + positives)
    for k in range(max_sprigs + 1):
        for combo in combinations_with_replacement(signed, k):
            for star in stars:
                yield SprigSum.from_signed(combo, star)


def _ctx(caps: Caps) -> ContextSet:
    return default_contexts(caps.ctx_sprigs, caps.ctx_len, caps.ctx_birthday)


# -- outcomes: closed-form classifiers against the oracle ---------------------

_SIGN_FROM_GEQ = {
    (True, True): NormalSign.EQUAL,
    (True, False): NormalSign.GREATER,
    (False, True): NormalSign.LESS,
    (False, False): NormalSign.CONFUSED,
}


def suite_outcomes(caps: Caps) -> SuiteResult:
    """Misere and normal closed forms versus brute force over the whole
    family, plus the structural side conditions of the closed forms."""
    result = SuiteResult("outcomes")
    mis0 = mis1 = nor = sign_checked = pzero = singles = 0
    w_mis0 = w_mis1 = w_nor = w_sign = w_p = w_zero = w_single = None
    zero_checked = 0

    for s in sprig_sum_family(caps.sprigs, caps.length):
        game = to_game(s)
        mis_closed = misere_outcome_closed(s)
        mis_oracle = outcome(game, MISERE)
        nor_closed = normal_outcome_closed(s)
        nor_oracle = outcome(game, NORMAL)
        sign = normal_classification(s)
        oracle_sign = _SIGN_FROM_GEQ[
            (normal_geq(game, games.ZERO), normal_geq(games.ZERO, game))
        ]
        text = render_position(s)
        adv = advantage(s)
        eps = edge(s)
        result.rows.append(
            {
                "position": text,
                "star": s.star,
                "delta": adv,
                "epsilon": str(eps),
                "epsilon_value": float(eps),
                "misere_closed": mis_closed.value,
                "misere_oracle": mis_oracle.value,
                "normal_closed": nor_closed.value,
                "normal_oracle": nor_oracle.value,
            }
        )

        if s.star == 0:
            mis0 += 1
            if mis_closed is not mis_oracle and w_mis0 is None:
                w_mis0 = f"{text}: closed {mis_closed.value}, oracle {mis_oracle.value}"
        else:
            mis1 += 1
            if mis_closed is not mis_oracle and w_mis1 is None:
                w_mis1 = f"{text}: closed {mis_closed.value}, oracle {mis_oracle.value}"
            if mis_oracle is Outcome.P:
                pzero += 1
                r = reduce(s)
                if (r.lefts or r.rights or s.star != 1) and w_p is None:
                    w_p = f"{text}: previous-player win but not equivalent to *"

        nor += 1
        if nor_closed is not nor_oracle and w_nor is None:
            w_nor = f"{text}: closed {nor_closed.value}, oracle {nor_oracle.value}"
        sign_checked += 1
        if sign is not oracle_sign and w_sign is None:
            w_sign = f"{text}: closed {sign.value}, oracle {oracle_sign.value}"

        if adv == 0 and eps.num == 0:
            zero_checked += 1
            r = reduce(s)
            if (r.lefts or r.rights) and w_zero is None:
                w_zero = f"{text}: advantage 0, edge 0, but sides do not cancel"

        if s.sprig_count == 1 and s.star == 0:
            singles += 1
            v = s.signed_values()[0]
            want = Outcome.L if v.num > 0 else Outcome.R
            if mis_oracle is not want and w_single is None:
                w_single = f"{text}: single sprig outcome {mis_oracle.value}"

    result.add(
        "misere-outcome-no-star",
        "closed misere outcome equals brute force on star-free sums",
        mis0,
        w_mis0,
    )
    result.add(
        "misere-outcome-with-star",
        "closed misere outcome equals brute force on sums plus star",
        mis1,
        w_mis1,
    )
    result.add(
        "previous-win-is-star-only",
        f"every misere previous-player win reduces to the bare star ({pzero} seen)",
        pzero,
        w_p,
    )
    result.add(
        "normal-sign-classification",
        "closed normal-play sign agrees with comparisons against zero",
        sign_checked,
        w_sign,
    )
    result.add(
        "normal-outcome",
        "closed normal outcome equals brute force on the same family",
        nor,
        w_nor,
    )
    result.add(
        "zero-advantage-zero-edge-cancels",
        "advantage 0 with edge 0 forces equal multisets",
        zero_checked,
        w_zero,
    )
    result.add(
        "single-sprig-sign-rule",
        "a lone sprig is a Left win, Right win, or star by value sign",
        singles,
        w_single,
    )
    return result


# -- toggle: adding star swaps the conventions --------------------------------


def suite_toggle(caps: Caps) -> SuiteResult:
    result = SuiteResult("toggle")
    fwd = back = hook = 0
    w_fwd = w_back = w_hook = None

    for s in sprig_sum_family(caps.sprigs, caps.length, stars=(0,)):
        g = to_game(s)
        g_star = to_game(s.with_star(1))
        text = render_position(s)
        o_plus = outcome(g, NORMAL)
        o_minus_star = outcome(g_star, MISERE)
        fwd += 1
        if o_plus is not o_minus_star and w_fwd is None:
            w_fwd = f"{text}: normal {o_plus.value}, misere+* {o_minus_star.value}"
        o_plus_star = outcome(g_star, NORMAL)
        o_minus = outcome(g, MISERE)
        back += 1
        if o_plus_star is not o_minus and w_back is None:
            w_back = f"{text}: normal+* {o_plus_star.value}, misere {o_minus.value}"
        result.rows.append(
            {
                "position": text,
                "normal": o_plus.value,
                "misere_plus_star": o_minus_star.value,
                "normal_plus_star": o_plus_star.value,
                "misere": o_minus.value,
            }
        )

    for s in sprig_sum_family(caps.sprigs, caps.length):
        hook += 1
        if not star_toggle_check(s) and w_hook is None:
            w_hook = render_position(s)

    # one game outside the sprig world with the same toggle property
    neg_one = number_to_game(Dyadic(-1))
    extra = make_game((neg_one,), ())
    extra_ok = outcome(extra, NORMAL) is outcome(add(extra, games.STAR), MISERE) and outcome(
        add(extra, games.STAR), NORMAL
    ) is outcome(extra, MISERE)

    result.add(
        "toggle-forward",
        "normal outcome equals misere outcome of the sum plus star",
        fwd,
        w_fwd,
    )
    result.add(
        "toggle-backward",
        "normal outcome of the sum plus star equals misere outcome",
        back,
        w_back,
    )
    result.add(
        "toggle-closed-form-hook",
        "closed-form star toggle hook holds on the family",
        hook,
        w_hook,
    )
    result.add(
        "toggle-left-one-discussion-game",
        "the game {-1|} toggles the same way",
        1,
        None if extra_ok else brace(extra),
    )
    return result


# -- starcolon: grafting on a green edge swaps the conventions -----------------


def _all_trees_born(birthday: int) -> list:
    """Every game tree born by the given day.  Only sane for day <= 2 (the
    count is doubly exponential: 4, then 256, then about 2**512)."""
    if birthday > 2:
        raise ValueError("full tree enumeration beyond day 2 is astronomical")
    known = [games.ZERO]
    for _ in range(birthday):
        subsets = []
        n = len(known)
        for mask in range(1 << n):
            subsets.append(tuple(known[i] for i in range(n) if mask >> i & 1))
        seen = set(known)
        for lefts in subsets:
            for rights in subsets:
                g = make_game(lefts, rights)
                if g not in seen:
                    seen.add(g)
                    known.append(g)
    return known


def suite_starcolon(caps: Caps) -> SuiteResult:
    """Misere outcome of star-then-G equals normal outcome of G.

    The full space of trees born by day 3 is around 2**512, far past any
    node budget, so per the stated fallback this sweeps every dicot born by
    day <= birthday plus a fixed-seed sample of distinct general trees whose
    options are drawn from the complete day-2 universe.
    """
    result = SuiteResult("starcolon")

    dicots = enumerate_dicots(caps.birthday)
    checked = 0
    witness = None
    hist: Counter = Counter()
    for g in dicots.games:
        sg = ordinal_sum(games.STAR, g)
        want = outcome(g, NORMAL)
        got = outcome(sg, MISERE)
        checked += 1
        hist[want.value] += 1
        if got is not want and witness is None:
            witness = f"{brace(g)}: normal {want.value}, star-colon misere {got.value}"
    result.add(
        "starcolon-all-dicots",
        f"all dicots born by day <= {caps.birthday}",
        checked,
        witness,
    )
    for out, count in sorted(hist.items()):
        result.rows.append({"population": "dicots", "normal_outcome": out, "count": count})

    day2 = _all_trees_born(2)
    rng = random.Random(caps.seed)
    seen_ids: set[int] = set()
    checked = 0
    witness = None
    hist = Counter()
    attempts = 0
    while checked < caps.samples and attempts < caps.samples * 20:
        attempts += 1
        g = make_game(
            rng.sample(day2, rng.randint(0, 10)),
            rng.sample(day2, rng.randint(0, 10)),
        )
        if g.id in seen_ids:
            continue
        seen_ids.add(g.id)
        sg = ordinal_sum(games.STAR, g)
        want = outcome(g, NORMAL)
        got = outcome(sg, MISERE)
        checked += 1
        hist[want.value] += 1
        if got is not want and witness is None:
            witness = f"{brace(g)}: normal {want.value}, star-colon misere {got.value}"
    result.add(
        "starcolon-sampled-trees",
        f"fixed-seed sample of {checked} distinct trees born by day <= 3",
        checked,
        witness,
    )
    for out, count in sorted(hist.items()):
        result.rows.append({"population": "sampled trees", "normal_outcome": out, "count": count})
    return result


# -- equivzero: a sprig plus its mirror vanishes -------------------------------


def suite_equivzero(caps: Caps, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult("equivzero")
    ctx = _ctx(caps)

    pairs = 0
    w_pair = None
    hypo = 0
    w_hypo = None
    for s in color_strings(caps.ctx_len):
        x = string_to_value(s)
        pair = add(sprig_game(x), sprig_game(-x))
        witness = equiv_zero_witness(pair, ctx)
        pairs += 1
        if witness is not None and w_pair is None:
            w_pair = f"*:{x} + *:{-x} distinguished from 0 by {ctx.label_of(witness)}"
        result.rows.append(
            {
                "claim": "mirror-pair-vanishes",
                "instance": f"*:{x} + *:{-x}",
                "witness": "" if witness is None else ctx.label_of(witness),
            }
        )
        hypo += 1
        if not check_ngame_hypothesis(sprig_game(x)) and w_hypo is None:
            w_hypo = f"*:{x}"

    result.add(
        "mirror-pair-vanishes",
        f"sprig plus mirrored sprig never changes an outcome over {len(ctx)} contexts",
        pairs,
        w_pair,
    )
    result.add(
        "first-player-win-hypothesis",
        "every follower of a sprig, plus its own mirror, is a first-player win",
        hypo,
        w_hypo,
    )

    star_witness = equiv_zero_witness(games.STAR, ctx)
    result.add(
        "harness-detects-star",
        "the search does distinguish the bare star from zero",
        1,
        None if star_witness is not None else "no witness found for star vs 0",
    )

    if inject_fault:
        witness = equiv_zero_witness(games.STAR, ctx)
        result.add(
            "injected-fault-star-equals-zero",
            "deliberately false claim that star vanishes (harness self-test)",
            1,
            None if witness is None else f"distinguished by {ctx.label_of(witness)}",
        )
    return result


# -- ordering: larger values make strictly better sprigs -----------------------


def suite_ordering(caps: Caps) -> SuiteResult:
    result = SuiteResult("ordering")
    ctx = _ctx(caps)

    values = sorted(string_to_value(s) for s in color_strings(caps.ctx_len))
    pairs = strict = paper = 0
    w_pairs = w_strict = w_paper = None
    for i, y in enumerate(values):
        for x in values[i + 1 :]:
            gx, gy = sprig_game(x), sprig_game(y)
            bad = refute_geq(gx, gy, ctx)
            pairs += 1
            if bad is not None and w_pairs is None:
                w_pairs = f"*:{x} vs *:{y}: refuted by {ctx.label_of(bad)}"
            wit = distinguish(gx, gy, ctx)
            strict += 1
            if wit is None and w_strict is None:
                w_strict = f"*:{x} vs *:{y}: no separating context found"
            probe = add(sprig_game(-x), games.STAR)
            paper += 1
            if outcome(add(gx, probe), MISERE) is outcome(add(gy, probe), MISERE) and w_paper is None:
                w_paper = f"*:{x} vs *:{y}: mirrored-sprig-plus-star probe fails"
            result.rows.append(
                {
                    "claim": "sprig-order-strict",
                    "instance": f"*:{x} > *:{y}",
                    "witness": "" if wit is None else ctx.label_of(wit),
                }
            )

    result.add(
        "sprig-order-holds",
        "no context refutes that the larger-valued sprig is at least the smaller",
        pairs,
        w_pairs,
    )
    result.add(
        "sprig-order-strict",
        "every unequal pair of sprigs is separated by some context",
        strict,
        w_strict,
    )
    result.add(
        "mirror-plus-star-probe",
        "the mirrored-sprig-plus-star context separates every unequal pair",
        paper,
        w_paper,
    )

    bases = sorted(string_to_value(s) for s in color_strings(min(2, caps.ctx_len)))
    tops = [v for v in bases if v.num > 0]
    ext_hold = ext_strict = 0
    w_hold = w_xstrict = None
    for x in bases:
        base = sprig_game(x)
        for y in tops:
            ext = ordinal_sum(base, number_to_game(y))
            ext_hold += 1
            bad = refute_geq(ext, base, ctx)
            if bad is not None and w_hold is None:
                w_hold = f"*:{x}:{y} vs *:{x}: refuted by {ctx.label_of(bad)}"
            ext_strict += 1
            probe = add(sprig_game(-x), games.STAR)
            if (
                distinguish(ext, base, ctx) is None
                or outcome(add(ext, probe), MISERE) is outcome(add(base, probe), MISERE)
            ) and w_xstrict is None:
                w_xstrict = f"*:{x}:{y} vs *:{x}: no separation"

    result.add(
        "ordinal-extension-not-worse",
        "grafting a positive number on a sprig never helps the opponent",
        ext_hold,
        w_hold,
    )
    result.add(
        "ordinal-extension-strictly-better",
        "grafting a positive number is a strict improvement, witnessed",
        ext_strict,
        w_xstrict,
    )
    return result


# -- canonical: the literal sprig tree collapses to star-colon-value ----------


def suite_canonical(caps: Caps) -> SuiteResult:
    result = SuiteResult("canonical")
    ctx = _ctx(caps)

    indist = canon = 0
    w_indist = w_canon = None
    incomp = 0
    w_incomp = None
    for s in color_strings(caps.ctx_len):
        x = string_to_value(s)
        lit = literal_sprig_game(s)
        can = sprig_game(x)
        indist += 1
        wit = distinguish(lit, can, ctx)
        if wit is not None and w_indist is None:
            w_indist = f"g{s}: distinguished from *:{x} by {ctx.label_of(wit)}"
        canon += 1
        if normal_canonical_form(lit) is not can and w_canon is None:
            w_canon = f"g{s}: normal canonical form is not *:{x}"
        result.rows.append(
            {
                "claim": "sprig-canonical-form",
                "instance": f"g{s} ~ *:{x}",
                "witness": "" if wit is None else ctx.label_of(wit),
            }
        )
        if x.num != 0:
            incomp += 1
            got = outcome(add(games.STAR, can), MISERE)
            if got is not Outcome.N and w_incomp is None:
                w_incomp = f"* + *:{x} is {got.value}, expected N"

    star_alone = outcome(games.STAR, MISERE)
    result.add(
        "literal-tree-indistinguishable",
        f"literal sprig trees match their star-colon form over {len(ctx)} contexts",
        indist,
        w_indist,
    )
    result.add(
        "normal-canonical-form",
        "normal-play canonical form of the literal tree is the star-colon form",
        canon,
        w_canon,
    )
    result.add(
        "zero-incomparable-with-sprigs",
        "star alone is a previous-player win; star plus any nonzero sprig is not",
        incomp + 1,
        None
        if star_alone is Outcome.P and w_incomp is None
        else (w_incomp or f"* alone is {star_alone.value}"),
    )
    return result


# -- monoid: words, relations as computation ----------------------------------


def _random_sum(rng: random.Random, pool: list[Dyadic], max_sprigs: int = 4) -> SprigSum:
    values = [rng.choice(pool) for _ in range(rng.randint(0, max_sprigs))]
    return SprigSum.from_signed(values, rng.randint(0, 1))


def suite_monoid(caps: Caps) -> SuiteResult:
    result = SuiteResult("monoid")
    ctx = _ctx(caps)
    rng = random.Random(caps.seed)
    positives = sprig_sum_values(caps.ctx_len)
    pool = positives + [-v for v in positives]

    reduction = outcome_ok = hom = laws = 0
    w_red = w_out = w_hom = w_laws = None
    for _ in range(caps.monoid_sums):
        g1 = _random_sum(rng, pool)
        g2 = _random_sum(rng, pool)
        w1, w2 = monoid.to_word(g1), monoid.to_word(g2)

        reduction += 1
        if w1 != monoid.to_word(reduce(g1)) and w_red is None:
            w_red = render_position(g1)
        outcome_ok += 1
        if monoid.word_outcome(w1) is not misere_outcome_closed(g1) and w_out is None:
            w_out = render_position(g1)
        hom += 1
        combined = SprigSum.from_signed(
            g1.signed_values() + g2.signed_values(), g1.star + g2.star
        )
        if monoid.to_word(combined) != monoid.multiply(w1, w2) and w_hom is None:
            w_hom = f"{render_position(g1)} with {render_position(g2)}"
        laws += 1
        w3 = monoid.to_word(_random_sum(rng, pool))
        ok = (
            monoid.multiply(w1, w2) == monoid.multiply(w2, w1)
            and monoid.multiply(monoid.multiply(w1, w2), w3)
            == monoid.multiply(w1, monoid.multiply(w2, w3))
            and monoid.multiply(w1, monoid.IDENTITY) == w1
            and monoid.multiply(monoid.ALPHA, monoid.ALPHA) == monoid.IDENTITY
        )
        if not ok and w_laws is None:
            w_laws = monoid.render_word(w1)

    result.add("word-of-reduced-sum", "reduction does not change the word", reduction, w_red)
    result.add(
        "word-outcome-consistent",
        "outcome through the word equals the closed form",
        outcome_ok,
        w_out,
    )
    result.add(
        "word-homomorphism",
        "the word of a concatenated sum is the product of the words",
        hom,
        w_hom,
    )
    result.add(
        "monoid-laws",
        "commutative, associative, identity, star self-inverse",
        laws,
        w_laws,
    )

    # words with small total exponent: the star word is the only previous win
    gens = [
        Dyadic(p, q)
        for q in range(4)
        for p in range(1, (2 << q) + 1, 2 if q else 1)
    ]
    words = {monoid.IDENTITY, monoid.ALPHA}
    signed_gens = [(v, 1) for v in gens] + [(v, -1) for v in gens]
    for k in range(1, 5):
        for combo in combinations_with_replacement(signed_gens, k):
            acc: dict[Dyadic, int] = {}
            for v, e in combo:
                acc[v] = acc.get(v, 0) + e
            exps = tuple((v, e) for v, e in acc.items() if e != 0)
            for alpha in (0, 1):
                words.add(monoid.MonoidWord(alpha, exps))
    tetra_witness = None
    for w in words:
        if (monoid.word_outcome(w) is Outcome.P) != (w == monoid.ALPHA):
            tetra_witness = monoid.render_word(w)
            break
    result.add(
        "previous-win-word-is-alpha",
        f"of {len(words)} small words, exactly the star word is a previous-player win",
        len(words),
        tetra_witness,
    )

    indist = 0
    w_indist = None
    small = sprig_sum_values(min(2, caps.ctx_len))
    for _ in range(caps.monoid_pairs):
        core = _random_sum(rng, small + [-v for v in small], max_sprigs=2)
        pads = []
        for _ in range(2):
            v = rng.choice(small)
            pads.append(
                SprigSum.from_signed(core.signed_values() + [v, -v], core.star)
            )
        wa, wb = monoid.to_word(pads[0]), monoid.to_word(pads[1])
        indist += 1
        if not monoid.words_equal(wa, wb):
            w_indist = f"padding changed the word of {render_position(core)}"
            continue
        wit = distinguish(to_game(pads[0]), to_game(pads[1]), ctx)
        if wit is not None and w_indist is None:
            w_indist = (
                f"{render_position(pads[0])} vs {render_position(pads[1])}: "
                f"separated by {ctx.label_of(wit)}"
            )
    result.add(
        "equal-words-indistinguishable",
        f"equal words found indistinguishable over {len(ctx)} contexts",
        indist,
        w_indist,
    )

    parity = 0
    w_parity = None
    for _ in range(20):
        g = _random_sum(rng, pool, max_sprigs=2)
        flipped = g.with_star(1 - g.star)
        parity += 1
        if monoid.words_equal(monoid.to_word(g), monoid.to_word(flipped)):
            w_parity = render_position(g)
            continue
        if distinguish(to_game(g), to_game(flipped), ctx) is None and w_parity is None:
            w_parity = f"{render_position(g)} vs star-flipped: no separating context"
    result.add(
        "star-parity-distinguishable",
        "a sum and the same sum plus star are always separated",
        parity,
        w_parity,
    )
    return result


# -- advisor: the recommended move is oracle-optimal --------------------------


def _literal_child(s: SprigSum, m) -> "games.Game":
    """The literal tree after a move.  The value-level position folds a
    second star away (star plus star is equivalent to zero over dicots);
    the literal tree keeps both, so put the pair back for the one move kind
    that creates it: a number slide landing on zero while a star is up."""
    base = to_game(m.position)
    if (
        m.kind == "slide"
        and m.new_value is not None
        and m.new_value.num == 0
        and s.star == 1
    ):
        return add(base, add(games.STAR, games.STAR))
    return base


def advisor_sweep(max_sprigs: int = 3, max_len: int = 3) -> SuiteResult:
    """Check best_move against brute force on the full small family: the
    abstract move set maps exactly onto the literal options, and the
    recommendation preserves a win whenever any move does."""
    result = SuiteResult("advisor")
    positions = moves_ok = optimal = 0
    w_moves = w_opt = None
    for s in sprig_sum_family(max_sprigs, max_len):
        game = to_game(s)
        text = render_position(s)
        positions += 1
        for mover in (Player.LEFT, Player.RIGHT):
            moves = legal_moves(s, mover)
            recommended = best_move(s, mover)
            options = set(game.left if mover is Player.LEFT else game.right)
            children = {_literal_child(s, m) for m in moves}
            moves_ok += 1
            if children != options and w_moves is None:
                w_moves = f"{text} ({mover.value}): abstract moves differ from the tree"
            if not moves:
                if recommended is not None and w_opt is None:
                    w_opt = f"{text} ({mover.value}): move advised in a moveless position"
                continue
            optimal += 1
            if recommended is None:
                if w_opt is None:
                    w_opt = f"{text} ({mover.value}): no move advised"
                continue
            child = _literal_child(s, recommended)
            if mover is Player.LEFT:
                mover_wins = left_first_wins(game, MISERE)
                move_wins = not right_first_wins(child, MISERE)
                best = any(not right_first_wins(c, MISERE) for c in options)
            else:
                mover_wins = right_first_wins(game, MISERE)
                move_wins = not left_first_wins(child, MISERE)
                best = any(not left_first_wins(c, MISERE) for c in options)
            if mover_wins != best and w_opt is None:
                w_opt = f"{text} ({mover.value}): oracle disagrees with itself"
            if move_wins != best and w_opt is None:
                w_opt = (
                    f"{text} ({mover.value}): advised {recommended.description}, "
                    f"which does not preserve the win"
                )
    result.add(
        "moves-match-tree",
        "value-level moves biject onto the literal options",
        moves_ok,
        w_moves,
    )
    result.add(
        "advice-is-optimal",
        "the advised move wins whenever any move wins",
        optimal,
        w_opt,
    )
    result.rows.append({"positions": positions})
    return result


_SUITES = {
    "outcomes": suite_outcomes,
    "toggle": suite_toggle,
    "starcolon": suite_starcolon,
    "equivzero": suite_equivzero,
    "ordering": suite_ordering,
    "canonical": suite_canonical,
    "monoid": suite_monoid,
}


def run_suites(
    names: list[str], caps: Optional[Caps] = None, inject_fault: bool = False
) -> list[SuiteResult]:
    caps = caps or Caps()
    if "all" in names:
        names = list(SUITE_NAMES)
    results = []
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
        if name == "equivzero":
            results.append(suite_equivzero(caps, inject_fault=inject_fault))
        else:
            results.append(_SUITES[name](caps))
    return results
