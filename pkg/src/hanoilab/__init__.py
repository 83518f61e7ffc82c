"""Generalized Tower of Hanoi laboratory.

Models couple a directed move graph over three pegs with a placement
distance C; solvers produce the constructive transfer sequences, the
recurrence module evaluates exact counts and closed forms, and the oracle
module provides exhaustive-search ground truth.
"""

from .model import (
    IllegalMoveError,
    MalformedStateError,
    Model,
    Move,
    MoveGraph,
    State,
    apply,
    apply_all,
    is_legal_state,
    legal_moves,
    mirror_move,
    mirror_sequence,
    mirror_state,
    standard_state,
)
from .oracle import (
    GoalPredicate,
    SearchCapExceeded,
    SearchResult,
    bfs_distance,
    conjecture_probe,
    shortest_symmetric,
    verify_optimality,
)
from .recurrence import (
    CountTable,
    QuadValue,
    RootBracket,
    ab_closed_form,
    closed_form_chord,
    closed_form_cycle,
    closed_form_linear,
    conjecture_values,
    eval_move_counts,
    growth_rate_5edge,
)
from .solvers import a_symmetric, classical_solve, directed_move, q_sequence, zeta
from .verify import (
    HarnessReport,
    ValidationReport,
    claim_harness,
    is_symmetric,
    lambda_predicates,
    project_out_largest,
    validate_sequence,
)

__version__ = "0.1.0"
