"""Shared hypothesis strategies and helpers for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from chemin import DecisionTable


@st.composite
def decision_tables(draw) -> DecisionTable:
    """Arbitrary 8x11 stand/draw tables (not necessarily best responses)."""
    grid = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=11, max_size=11),
            min_size=8,
            max_size=8,
        )
    )
    return DecisionTable.from_grid(grid)


#: Probabilities in [0, 1] with small denominators, as exact fractions.
probabilities = st.fractions(min_value=0, max_value=1, max_denominator=64)


def assert_plausible_response_shape(table: DecisionTable) -> None:
    """Structural facts every computed best-response table must satisfy:
    totals 0-2 always draw, 7 always stands, and within a column the draw
    region is an unbroken prefix (drawing at j implies drawing below j).
    """
    grid = table.to_grid()
    for total in (0, 1, 2):
        assert all(grid[total]), f"row {total} must be all draw"
    assert not any(grid[7]), "row 7 must be all stand"
    for column in range(11):
        entries = [grid[total][column] for total in range(8)]
        assert entries == sorted(entries, reverse=True), (
            f"column {column} not monotone down the totals: {entries}"
        )
