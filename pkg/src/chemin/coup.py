"""Whole-coup analysis and the two 2x2 games it induces.

Conditioning on Player holding a 5, the way the 19th-century authors
framed the draw-at-five question, throws away most coups and yields a
statistic of dubious operational meaning.  The reformulated question
scores an arbitrary coup under (a) Player's action when he does hold 5
and (b) the rule Banker assumes and best-responds to.  This module
enumerates full coups exactly, including naturals, builds both the
conditional and the whole-coup 2x2 payoff matrices, and solves 2x2
zero-sum games in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .banker import STOOD, DecisionTable, PlayerRule, best_response_table
from .cards import CARD_VALUES, HAND_TOTALS, mod10, sign, third_card_pdf, two_card_pdf
from .five import FiveAction, StatTriple, five_stats
from .rational import as_rational

Matrix2x2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class CoupPolicy:
    """How a coup plays out when no natural settles it immediately.

    Player's mandatory rule is fixed - draw on two-card totals 0-4, stand
    on 6-7 - so the only freedom is the probability of drawing at 5:
    0 plays non-tireur, 1 plays tireur, anything between mixes the two
    branches.  The Banker table applies whenever Banker gets to act.
    """

    draw_at_five: Fraction
    banker_table: DecisionTable

    def __post_init__(self) -> None:
        object.__setattr__(self, "draw_at_five", as_rational(self.draw_at_five))
        if not 0 <= self.draw_at_five <= 1:
            raise ValueError(
                f"draw-at-five probability must be in [0, 1]: {self.draw_at_five}"
            )

    @classmethod
    def standing(cls, table: DecisionTable) -> "CoupPolicy":
        return cls(Fraction(0), table)

    @classmethod
    def drawing(cls, table: DecisionTable) -> "CoupPolicy":
        return cls(Fraction(1), table)

    @classmethod
    def for_action(cls, action: FiveAction, table: DecisionTable) -> "CoupPolicy":
        return cls(Fraction(int(action)), table)


def coup_stats(policy: CoupPolicy) -> StatTriple:
    """Exact W, T, E for a full coup under the policy.

    Both two-card totals are enumerated; a natural (8-9) on either side
    settles the coup on the two-card totals, otherwise Player acts,
    Banker replies from his table given what he observed, and the final
    totals are compared.  The expectation is accumulated through the
    sign of the margin and cross-checked against the win/tie
    probabilities when the triple is built.
    """
    table = policy.banker_table
    draw_probability = policy.draw_at_five
    win = tie = expectation = Fraction(0)

    def tally(margin: int, weight: Fraction) -> None:
        nonlocal win, tie, expectation
        if margin > 0:
            win += weight
        elif margin == 0:
            tie += weight
        expectation += sign(margin) * weight

    def banker_reply(player_final: int, banker_two: int, observed, weight: Fraction) -> None:
        if table.draws(banker_two, observed):
            for last in CARD_VALUES:
                tally(
                    player_final - mod10(banker_two + last),
                    weight * third_card_pdf(last),
                )
        else:
            tally(player_final - banker_two, weight)

    def player_draw(player_two: int, banker_two: int, weight: Fraction) -> None:
        for third in CARD_VALUES:
            banker_reply(
                mod10(player_two + third),
                banker_two,
                third,
                weight * third_card_pdf(third),
            )

    for player_two in HAND_TOTALS:
        for banker_two in HAND_TOTALS:
            weight = two_card_pdf(player_two) * two_card_pdf(banker_two)
            if player_two >= 8 or banker_two >= 8:
                tally(player_two - banker_two, weight)
            elif player_two <= 4:
                player_draw(player_two, banker_two, weight)
            elif player_two == 5:
                if draw_probability < 1:
                    banker_reply(5, banker_two, STOOD, weight * (1 - draw_probability))
                if draw_probability > 0:
                    player_draw(5, banker_two, weight * draw_probability)
            else:
                banker_reply(player_two, banker_two, STOOD, weight)

    return StatTriple(win=win, tie=tie, expectation=expectation)


def five_matrix() -> Matrix2x2:
    """Payoff matrix of the conditional-on-5 game.

    Rows are Player's action at 5 (stand, draw); columns are the rule
    Banker assumes (non-tireur, tireur); entries are Player's expected
    profit on coups where he holds 5 and Banker has no natural.
    """
    return tuple(
        tuple(
            five_stats(action, best_response_table(assumed)).expectation
            for assumed in PlayerRule
        )
        for action in FiveAction
    )


def bar_matrix() -> Matrix2x2:
    """Payoff matrix of the whole-coup game (no conditioning on a 5).

    Same row/column conventions as ``five_matrix``; entries are Player's
    expected profit on an arbitrary coup.  Unlike the conditional game,
    this one could be played repeatedly without Banker learning anything
    he is not already assumed to know, so its equilibrium is meaningful.
    """
    return tuple(
        tuple(
            coup_stats(
                CoupPolicy.for_action(action, best_response_table(assumed))
            ).expectation
            for assumed in PlayerRule
        )
        for action in FiveAction
    )


@dataclass(frozen=True)
class TwoByTwoGame:
    """Exact solution of a 2x2 zero-sum game, row player maximizing.

    ``kind`` is "saddle" when a pure-strategy equilibrium exists (maximin
    equals minimax over pure strategies) and the mixes are then one-hot;
    otherwise "mixed", with both mixes interior and each side's mix
    making the opponent exactly indifferent between his two options.
    Construction re-verifies whichever identities apply.
    """

    payoff: Matrix2x2
    value: Fraction
    row_mix: tuple[Fraction, Fraction]
    col_mix: tuple[Fraction, Fraction]
    kind: str

    def __post_init__(self) -> None:
        for mix in (self.row_mix, self.col_mix):
            if sum(mix) != 1 or any(weight < 0 for weight in mix):
                raise ValueError(f"strategy mix must be a probability pair: {mix}")
        if self.kind == "mixed":
            for col in range(2):
                if self._row_payoff(col) != self.value:
                    raise ValueError("row mix does not make the column player indifferent")
            for row in range(2):
                if self._col_payoff(row) != self.value:
                    raise ValueError("column mix does not make the row player indifferent")
        elif self.kind == "saddle":
            row = max(range(2), key=lambda i: self.row_mix[i])
            col = max(range(2), key=lambda j: self.col_mix[j])
            if self.payoff[row][col] != self.value:
                raise ValueError("saddle value does not match the saddle cell")
        else:
            raise ValueError(f"kind must be 'saddle' or 'mixed': {self.kind!r}")

    def _row_payoff(self, col: int) -> Fraction:
        return self.row_mix[0] * self.payoff[0][col] + self.row_mix[1] * self.payoff[1][col]

    def _col_payoff(self, row: int) -> Fraction:
        return self.col_mix[0] * self.payoff[row][0] + self.col_mix[1] * self.payoff[row][1]


def solve_2x2(payoff) -> TwoByTwoGame:
    """Solve a 2x2 zero-sum game exactly.

    Returns the saddle point whenever pure maximin equals pure minimax.
    Otherwise the unique equalizing mixture applies: for payoff
    ((a, b), (c, d)) the value is (ad - bc)/(a - b - c + d), and a game
    without a saddle point cannot have a zero denominator.
    """
    (a, b), (c, d) = ((as_rational(entry) for entry in row) for row in payoff)
    grid: Matrix2x2 = ((a, b), (c, d))
    one, zero = Fraction(1), Fraction(0)

    row_mins = (min(a, b), min(c, d))
    col_maxs = (max(a, c), max(b, d))
    maximin, minimax = max(row_mins), min(col_maxs)
    if maximin == minimax:
        row = row_mins.index(maximin)
        col = col_maxs.index(minimax)
        return TwoByTwoGame(
            payoff=grid,
            value=maximin,
            row_mix=(one, zero) if row == 0 else (zero, one),
            col_mix=(one, zero) if col == 0 else (zero, one),
            kind="saddle",
        )

    denominator = a - b - c + d
    if denominator == 0:
        raise ArithmeticError(
            "no saddle point yet zero equalizer denominator; "
            "impossible for a 2x2 zero-sum game"
        )
    return TwoByTwoGame(
        payoff=grid,
        value=(a * d - b * c) / denominator,
        row_mix=((d - c) / denominator, (a - b) / denominator),
        col_mix=((d - b) / denominator, (a - c) / denominator),
        kind="mixed",
    )
