"""Banker best-response tables as established in the classical baccarat
literature (the versions that later authors verified to be exactly right).

Rows are Banker's two-card total 0-7; columns are Player's third card
0-9 followed by the "Player stood" column.  1 = draw, 0 = stand.
"""

#: Best response when Player is known to stand on a two-card 5 (non-tireur).
GRID_VS_NON_TIREUR = [
    # 0  1  2  3  4  5  6  7  8  9  stood
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

#: Best response when Player is known to draw on a two-card 5 (tireur).
GRID_VS_TIREUR = [
    # 0  1  2  3  4  5  6  7  8  9  stood
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1],
    [0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]
