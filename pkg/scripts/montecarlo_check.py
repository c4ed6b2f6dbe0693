#!/usr/bin/env python3
"""Monte Carlo cross-check of the exact whole-coup statistics.

Simulates each pure (action-at-5, assumed-rule) scenario and reports the
z-score of every empirical rate against its exact value.  All runs are
seeded, so the output is reproducible bit for bit.

Usage: python scripts/montecarlo_check.py [--coups N] [--seed S]
"""

from __future__ import annotations

import argparse
import time

from chemin import (
    CoupPolicy,
    FiveAction,
    PlayerRule,
    SimConfig,
    best_response_table,
    coup_stats,
    simulate,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--coups", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=2026)
    args = parser.parse_args()

    print(f"{args.coups} coups per scenario, base seed {args.seed}\n")
    worst = 0.0
    for index, (action, assumed) in enumerate(
        (a, v) for a in FiveAction for v in PlayerRule
    ):
        policy = CoupPolicy.for_action(action, best_response_table(assumed))
        exact = coup_stats(policy)
        started = time.perf_counter()
        result = simulate(SimConfig(coups=args.coups, seed=args.seed + index, policy=policy))
        elapsed = time.perf_counter() - started

        label = f"{action.name.lower():5s} at 5 vs assumed {assumed.name.lower().replace('_', '-')}"
        print(f"{label}  ({elapsed:.1f}s)")
        pairs = [
            ("W", result.empirical_win, float(exact.win)),
            ("T", result.empirical_tie, float(exact.tie)),
            ("L", result.empirical_loss, float(exact.loss)),
        ]
        for name, empirical, truth in pairs:
            se = (truth * (1 - truth) / args.coups) ** 0.5
            z = (empirical - truth) / se
            worst = max(worst, abs(z))
            print(f"  {name}: empirical {empirical:.6f} vs exact {truth:.6f}  (z = {z:+.2f})")
    print(f"\nlargest |z| = {worst:.2f} (anything under ~4 is unremarkable)")


if __name__ == "__main__":
    main()
