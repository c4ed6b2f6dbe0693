"""Banker's conditional expectations and best-response tables.

When neither hand is a natural, Banker learns exactly one thing about
Player before acting: the value of Player's third card, or the fact that
Player stood.  Given Banker's own two-card total (0-7; totals 8-9 are
naturals and end the coup) and that observation, his stand and draw
expectations are conditional means over Player's hidden initial total.
The conditioning depends on Player's rule at 5: a non-tireur draws only
on 0-4 and stands on 5-7, a tireur draws on 0-5 and stands on 6-7.

A best-response table records, cell by cell, whether the draw
expectation strictly exceeds the stand expectation.  Besides the two
pure-rule tables, this module builds the posterior-weighted response to
a mixed rule, the unweighted-average rule Dormoy used in 1872, and the
historically flawed table variants of Dormoy and Badoureau.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import cache
from typing import Iterable, Optional

from .cards import CARD_VALUES, mod10, sign, third_card_pdf, two_card_pdf
from .rational import as_rational

#: Observation marker for "Player stood" (there is no third card to see).
STOOD: Optional[int] = None

#: A Banker decision point: (own two-card total, observation).  The
#: observation is a card value 0-9 or STOOD.
Cell = tuple[int, Optional[int]]

BANKER_TOTALS = range(8)

#: Column order used everywhere a table is laid out row-major.
COLUMNS: tuple[Optional[int], ...] = (*CARD_VALUES, STOOD)


class PlayerRule(IntEnum):
    """Player's pure rule on a two-card total of 5."""

    NON_TIREUR = 0  # stands at 5
    TIREUR = 1  # draws at 5

    @property
    def draw_totals(self) -> range:
        """Two-card totals on which this rule draws a third card."""
        return range(0, 5 + self)

    @property
    def stand_totals(self) -> range:
        """Non-natural two-card totals on which this rule stands."""
        return range(5 + self, 8)


def _column_index(observed: Optional[int]) -> int:
    if observed is STOOD:
        return 10
    if observed in CARD_VALUES:
        return observed
    raise ValueError(f"observation must be a card value 0-9 or STOOD: {observed!r}")


def _check_cell(banker_total: int, observed: Optional[int]) -> None:
    if banker_total not in BANKER_TOTALS:
        raise ValueError(f"Banker decision totals are 0-7: {banker_total!r}")
    _column_index(observed)


@dataclass(frozen=True)
class DecisionTable:
    """An 8x11 stand/draw grid.

    Rows are Banker two-card totals 0-7; columns are Player's third card
    0-9 followed by the stood column.  True means draw.
    """

    rows: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(BANKER_TOTALS) or any(
            len(row) != len(COLUMNS) for row in self.rows
        ):
            raise ValueError("a decision table is 8 rows of 11 entries")
        if any(not isinstance(entry, bool) for row in self.rows for entry in row):
            raise ValueError("decision table entries must be booleans")

    @classmethod
    def from_grid(cls, grid: Iterable[Iterable[int]]) -> "DecisionTable":
        """Build from an 8x11 grid of 0/1 (or boolean) entries."""
        return cls(tuple(tuple(bool(entry) for entry in row) for row in grid))

    def to_grid(self) -> list[list[int]]:
        """Row-major 0/1 grid in the fixed column order 0-9, stood."""
        return [[int(entry) for entry in row] for row in self.rows]

    def draws(self, banker_total: int, observed: Optional[int]) -> bool:
        _check_cell(banker_total, observed)
        return self.rows[banker_total][_column_index(observed)]

    def flip(self, cells: Iterable[Cell]) -> "DecisionTable":
        """A copy with the given cells toggled."""
        targets = set()
        for banker_total, observed in cells:
            _check_cell(banker_total, observed)
            targets.add((banker_total, _column_index(observed)))
        return DecisionTable(
            tuple(
                tuple(entry ^ ((j, c) in targets) for c, entry in enumerate(row))
                for j, row in enumerate(self.rows)
            )
        )

    def differing_cells(self, other: "DecisionTable") -> frozenset[Cell]:
        """Cells at which the two tables disagree."""
        return frozenset(
            (j, COLUMNS[c])
            for j in BANKER_TOTALS
            for c in range(len(COLUMNS))
            if self.rows[j][c] != other.rows[j][c]
        )


def _consistent_totals(assumed: PlayerRule, observed: Optional[int]) -> range:
    """Player initial totals consistent with the rule and the observation."""
    return assumed.stand_totals if observed is STOOD else assumed.draw_totals


def banker_stand_ev(
    assumed: PlayerRule, banker_total: int, observed: Optional[int]
) -> Fraction:
    """Banker's conditional expected profit if he stands."""
    _check_cell(banker_total, observed)
    totals = _consistent_totals(assumed, observed)
    acc = Fraction(0)
    for initial in totals:
        final = initial if observed is STOOD else mod10(initial + observed)
        acc += sign(banker_total - final) * two_card_pdf(initial)
    return acc / sum(two_card_pdf(initial) for initial in totals)


def banker_draw_ev(
    assumed: PlayerRule, banker_total: int, observed: Optional[int]
) -> Fraction:
    """Banker's conditional expected profit if he draws a third card."""
    _check_cell(banker_total, observed)
    totals = _consistent_totals(assumed, observed)
    acc = Fraction(0)
    for initial in totals:
        final = initial if observed is STOOD else mod10(initial + observed)
        weight = two_card_pdf(initial)
        for last in CARD_VALUES:
            acc += sign(mod10(banker_total + last) - final) * weight * third_card_pdf(last)
    return acc / sum(two_card_pdf(initial) for initial in totals)


@cache
def best_response_table(assumed: PlayerRule) -> DecisionTable:
    """Banker's best response to one Player pure rule.

    A cell says draw iff drawing beats standing strictly; an exact tie
    would be recorded as stand.  No tie occurs for either rule (see
    ``equal_ev_cells``).
    """
    return DecisionTable(
        tuple(
            tuple(
                banker_draw_ev(assumed, j, k) > banker_stand_ev(assumed, j, k)
                for k in COLUMNS
            )
            for j in BANKER_TOTALS
        )
    )


def equal_ev_cells(assumed: PlayerRule) -> frozenset[Cell]:
    """Cells where standing and drawing have exactly equal expectation."""
    return frozenset(
        (j, k)
        for j in BANKER_TOTALS
        for k in COLUMNS
        if banker_draw_ev(assumed, j, k) == banker_stand_ev(assumed, j, k)
    )


def _event_weight(assumed: PlayerRule, observed: Optional[int]) -> Fraction:
    """Chance that the rule produces the observed event class (drew/stood)."""
    return sum(two_card_pdf(i) for i in _consistent_totals(assumed, observed))


def mixed_best_response(draw_at_five: Fraction | int | str) -> DecisionTable:
    """Banker's best response to a Player who draws at 5 with this probability.

    Conditional on what Banker observed, each pure rule's expectations are
    weighted by the posterior probability that Player follows it: the
    prior (1-p, p) times the chance of the observed event class under the
    rule (a non-tireur draws on 89/137 of non-natural totals and stands on
    48/137; a tireur on 105/137 and 32/137).  Probabilities 0 and 1
    collapse to the pure best responses; only those two and 1/2 are
    anchored in the historical literature, the rest is an interpolation.
    The 1/2 table is Banker's mandatory rule in modern punto banco.
    """
    draw_probability = as_rational(draw_at_five)
    if not 0 <= draw_probability <= 1:
        raise ValueError(f"draw-at-five probability must be in [0, 1]: {draw_probability}")
    rows = []
    for j in BANKER_TOTALS:
        row = []
        for k in COLUMNS:
            weight_non_tireur = (1 - draw_probability) * _event_weight(PlayerRule.NON_TIREUR, k)
            weight_tireur = draw_probability * _event_weight(PlayerRule.TIREUR, k)
            draw_side = (
                weight_non_tireur * banker_draw_ev(PlayerRule.NON_TIREUR, j, k)
                + weight_tireur * banker_draw_ev(PlayerRule.TIREUR, j, k)
            )
            stand_side = (
                weight_non_tireur * banker_stand_ev(PlayerRule.NON_TIREUR, j, k)
                + weight_tireur * banker_stand_ev(PlayerRule.TIREUR, j, k)
            )
            row.append(draw_side > stand_side)
        rows.append(tuple(row))
    return DecisionTable(tuple(rows))


def dormoy_unweighted_response() -> DecisionTable:
    """Banker response from Dormoy's 1872 averaging rule.

    Compares the plain means of the two rules' conditional expectations,
    ignoring how likely each rule is to have produced the observation.
    Methodologically naive, though it happens to yield the same table as
    ``mixed_best_response(1/2)``.
    """
    rows = []
    for j in BANKER_TOTALS:
        row = []
        for k in COLUMNS:
            draw_side = (
                banker_draw_ev(PlayerRule.NON_TIREUR, j, k)
                + banker_draw_ev(PlayerRule.TIREUR, j, k)
            )
            stand_side = (
                banker_stand_ev(PlayerRule.NON_TIREUR, j, k)
                + banker_stand_ev(PlayerRule.TIREUR, j, k)
            )
            row.append(draw_side > stand_side)
        rows.append(tuple(row))
    return DecisionTable(tuple(rows))


@dataclass(frozen=True)
class HistoricalVariant:
    """A named set of table deviations from a 19th-century analysis.

    The flip sets hold the cells whose stand/draw entries the author got
    wrong, relative to the correct best-response tables.  Near-tie cells
    are the ones the author declared indifferent; those are annotations
    only (the table value stays correct), flagged when reporting.
    """

    name: str
    flips_vs_non_tireur: frozenset[Cell] = frozenset()
    flips_vs_tireur: frozenset[Cell] = frozenset()
    near_ties_vs_non_tireur: frozenset[Cell] = frozenset()

    def flips_for(self, assumed: PlayerRule) -> frozenset[Cell]:
        return self.flips_vs_tireur if assumed else self.flips_vs_non_tireur


CORRECT = HistoricalVariant("correct")

#: Dormoy (1872): one slip per table.  Against a non-tireur he called the
#: (5, 4) cell indifferent, an artifact of rounding to two decimals (the
#: stand and draw expectations are -299/1157 and -300/1157, both -0.26);
#: against a tireur he had the (6, 6) entry wrong.
DORMOY = HistoricalVariant(
    "dormoy",
    flips_vs_tireur=frozenset({(6, 6)}),
    near_ties_vs_non_tireur=frozenset({(5, 4)}),
)

#: Badoureau (1881): the non-tireur table exactly right, three errors in
#: the tireur table.
BADOUREAU = HistoricalVariant(
    "badoureau",
    flips_vs_tireur=frozenset({(4, 1), (4, 9), (6, 6)}),
)

VARIANTS: dict[str, HistoricalVariant] = {
    variant.name: variant for variant in (CORRECT, DORMOY, BADOUREAU)
}


def historical_table(variant: HistoricalVariant, assumed: PlayerRule) -> DecisionTable:
    """The table the variant's author used against one assumed rule."""
    return best_response_table(assumed).flip(variant.flips_for(assumed))
