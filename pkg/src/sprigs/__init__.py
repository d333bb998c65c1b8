"""Exact solver and verification toolkit for Hackenbush Sprigs.

A sprig is a Hackenbush string whose ground edge is green and whose
remaining edges are red or blue.  This package classifies arbitrary sums
of sprigs (plus optional stars) under both the misere and the normal play
convention in closed form, advises optimal misere moves, maps sums into
their commutative monoid of indistinguishability classes, and checks every
one of those closed forms against a brute-force game-tree oracle.
"""

from .dyadic import (
    Dyadic,
    color_strings,
    compare,
    number_options,
    number_to_game,
    parse_dyadic,
    simplest_between,
    string_to_value,
    value_to_string,
)
from .errors import BudgetExceededError, ClassifierError, ParseError, SprigsError
from .games import (
    STAR,
    ZERO,
    Convention,
    Game,
    Outcome,
    add,
    conjugate,
    make_game,
    nim_heap,
    normal_canonical_form,
    normal_eq,
    normal_geq,
    ordinal_sum,
    outcome,
    set_node_budget,
)
from .grammar import parse_position, render_position
from .monoid import ALPHA, IDENTITY, MonoidWord, multiply, render_word, to_word, word_outcome, words_equal
from .positions import (
    Move,
    NormalSign,
    Player,
    Sprig,
    SprigSum,
    advantage,
    best_move,
    edge,
    legal_moves,
    literal_sprig_game,
    misere_outcome_closed,
    normal_classification,
    normal_outcome_closed,
    sprig_from_colors,
    sprig_game,
    star_toggle_check,
    to_game,
)
from .positions import reduce as reduce_sum
from .universe import (
    ContextSet,
    check_ngame_hypothesis,
    default_contexts,
    distinguish,
    enumerate_dicots,
    is_dicot,
    refute_geq,
    sprig_sum_contexts,
    verify_equiv_zero,
)

__version__ = "0.1.0"
