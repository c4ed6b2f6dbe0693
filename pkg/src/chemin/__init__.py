"""Exact analysis engine for baccarat chemin de fer.

Reproduces, in exact rational arithmetic, the Banker best-response
tables, the draw-at-five statistics of Bertrand's four problems, the
flawed 19th-century variants of Dormoy and Badoureau, mixed-strategy
corrections, whole-coup game values, and the exact solutions of the two
2x2 games these induce, with a seeded Monte Carlo cross-check.
"""

from .banker import (
    BADOUREAU,
    BANKER_TOTALS,
    COLUMNS,
    CORRECT,
    DORMOY,
    STOOD,
    VARIANTS,
    Cell,
    DecisionTable,
    HistoricalVariant,
    PlayerRule,
    banker_draw_ev,
    banker_stand_ev,
    best_response_table,
    dormoy_unweighted_response,
    equal_ev_cells,
    historical_table,
    mixed_best_response,
)
from .cards import (
    CARD_VALUES,
    HAND_TOTALS,
    mod10,
    sign,
    third_card_pdf,
    tie_indicator,
    two_card_pdf,
    win_indicator,
)
from .coup import (
    CoupPolicy,
    Matrix2x2,
    TwoByTwoGame,
    bar_matrix,
    coup_stats,
    five_matrix,
    solve_2x2,
)
from .five import (
    FiveAction,
    FiveScenario,
    StatTriple,
    bertrand_report,
    five_functional,
    five_stats,
    naive_average_ev,
)
from .rational import Rational, as_rational, render_decimal, render_exact
from .simulate import SimConfig, SimResult, bernoulli, draw_card_value, simulate

__version__ = "0.1.0"

__all__ = [
    "BADOUREAU",
    "BANKER_TOTALS",
    "CARD_VALUES",
    "COLUMNS",
    "CORRECT",
    "DORMOY",
    "HAND_TOTALS",
    "STOOD",
    "VARIANTS",
    "Cell",
    "CoupPolicy",
    "DecisionTable",
    "FiveAction",
    "FiveScenario",
    "HistoricalVariant",
    "Matrix2x2",
    "PlayerRule",
    "Rational",
    "SimConfig",
    "SimResult",
    "StatTriple",
    "TwoByTwoGame",
    "as_rational",
    "banker_draw_ev",
    "banker_stand_ev",
    "bar_matrix",
    "bernoulli",
    "bertrand_report",
    "best_response_table",
    "coup_stats",
    "dormoy_unweighted_response",
    "draw_card_value",
    "equal_ev_cells",
    "five_functional",
    "five_matrix",
    "five_stats",
    "historical_table",
    "mixed_best_response",
    "mod10",
    "naive_average_ev",
    "render_decimal",
    "render_exact",
    "sign",
    "simulate",
    "solve_2x2",
    "third_card_pdf",
    "tie_indicator",
    "two_card_pdf",
    "win_indicator",
]
