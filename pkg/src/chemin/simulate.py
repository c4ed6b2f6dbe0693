"""Seeded Monte Carlo playout of full coups.

A statistical cross-check of the exact engine that shares none of its
enumeration code.  Randomness comes from Python's Mersenne Twister
(``random.Random``), consumed only through ``getrandbits`` so the card
stream is a fixed, documented function of the seed:

* card value: take 4 bits, reject 13-15, map 10-12 to value 0
  (the three extra denominations worth zero);
* Bernoulli(n/d): take ``d.bit_length()`` bits, reject >= d, compare < n.

Runs are single-threaded by design; identical configurations produce
bit-identical results on any platform.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .coup import CoupPolicy


def draw_card_value(rng: random.Random) -> int:
    """One card value from the documented bit-stream algorithm."""
    while True:
        raw = rng.getrandbits(4)
        if raw < 13:
            return raw if raw < 10 else 0


def bernoulli(rng: random.Random, numerator: int, denominator: int) -> bool:
    """Exact Bernoulli(numerator/denominator) draw by bit rejection."""
    if numerator == 0:
        return False
    if numerator == denominator:
        return True
    bits = denominator.bit_length()
    while True:
        raw = rng.getrandbits(bits)
        if raw < denominator:
            return raw < numerator


@dataclass(frozen=True)
class SimConfig:
    """One reproducible run: (seed, coups, policy) determines every bit."""

    coups: int
    seed: int
    policy: CoupPolicy

    def __post_init__(self) -> None:
        if self.coups < 1:
            raise ValueError(f"coups must be >= 1: {self.coups}")


@dataclass(frozen=True)
class SimResult:
    """Outcome tallies plus binomial-model summaries (floats, display only)."""

    wins: int
    ties: int
    losses: int

    @property
    def coups(self) -> int:
        return self.wins + self.ties + self.losses

    @property
    def empirical_win(self) -> float:
        return self.wins / self.coups

    @property
    def empirical_tie(self) -> float:
        return self.ties / self.coups

    @property
    def empirical_loss(self) -> float:
        return self.losses / self.coups

    @property
    def empirical_expectation(self) -> float:
        return (self.wins - self.losses) / self.coups

    def rate_standard_error(self, probability: float) -> float:
        """Binomial standard error of a rate estimated from this many coups."""
        return math.sqrt(probability * (1 - probability) / self.coups)

    @property
    def se_win(self) -> float:
        return self.rate_standard_error(self.empirical_win)

    @property
    def se_tie(self) -> float:
        return self.rate_standard_error(self.empirical_tie)

    @property
    def se_loss(self) -> float:
        return self.rate_standard_error(self.empirical_loss)

    @property
    def se_expectation(self) -> float:
        """Standard error of the mean of the per-coup profit in {-1, 0, +1}."""
        second_moment = (self.wins + self.losses) / self.coups
        return math.sqrt((second_moment - self.empirical_expectation**2) / self.coups)


def simulate(config: SimConfig) -> SimResult:
    """Play ``config.coups`` independent coups and tally the outcomes."""
    rng = random.Random(config.seed)
    rows = config.policy.banker_table.rows
    pi = config.policy.draw_at_five
    wins = ties = losses = 0

    for _ in range(config.coups):
        player_two = (draw_card_value(rng) + draw_card_value(rng)) % 10
        banker_two = (draw_card_value(rng) + draw_card_value(rng)) % 10
        if player_two >= 8 or banker_two >= 8:
            player_final, banker_final = player_two, banker_two
        else:
            if player_two <= 4 or (
                player_two == 5 and bernoulli(rng, pi.numerator, pi.denominator)
            ):
                third = draw_card_value(rng)
                player_final = (player_two + third) % 10
                banker_draws = rows[banker_two][third]
            else:
                player_final = player_two
                banker_draws = rows[banker_two][10]
            if banker_draws:
                banker_final = (banker_two + draw_card_value(rng)) % 10
            else:
                banker_final = banker_two
        if player_final > banker_final:
            wins += 1
        elif player_final == banker_final:
            ties += 1
        else:
            losses += 1

    return SimResult(wins=wins, ties=ties, losses=losses)
