"""Reference tables used for golden comparisons and diagnostics.

Values here are fixed inputs, not outputs of this package: the published
half-tables of Betti numbers for low genus, the recorded boundary-map data
for genus 1 and 2, and the recorded kernel/cokernel rows of the genus 2+2
splitting.  The verify suite recomputes everything independently and
compares against these.
"""

from __future__ import annotations

# Half tables, degrees 0 .. 3g-2; the remaining degrees follow by duality.
F2_HALF = {
    1: (1, 1),
    2: (1, 0, 1, 5, 5),
    3: (1, 0, 1, 6, 1, 7, 22, 22),
    4: (1, 0, 1, 8, 1, 8, 29, 9, 37, 93, 93),
    5: (1, 0, 1, 10, 1, 10, 46, 10, 46, 131, 56, 176, 386, 386),
    6: (1, 0, 1, 12, 1, 12, 67, 12, 67, 232, 67, 233, 574, 299, 794, 1586, 1586),
}

Q_HALF = {
    1: (1, 0),
    2: (1, 0, 1, 4, 0),
    3: (1, 0, 1, 6, 1, 6, 15, 0),
    4: (1, 0, 1, 8, 1, 8, 29, 8, 28, 56, 0),
    5: (1, 0, 1, 10, 1, 10, 46, 10, 46, 130, 45, 120, 210, 0),
    6: (1, 0, 1, 12, 1, 12, 67, 12, 67, 232, 67, 232, 561, 220, 495, 792, 0),
}

# Recorded genus-1 boundary data, rows r = 0..5.
# Columns: h_r, n_r (Betti numbers of the half-space), then (rank, dom, cod)
# triples for the maps mu, rho, nu.  The n value at r = 5 disagrees with the
# closed formula (which gives 0); see diagnostics in the moduli module.
GENUS1_ROWS = {
    0: (1, 1, (1, 1, 1), (0, 0, 1), (1, 1, 1)),
    1: (1, 0, (0, 1, 0), (0, 0, 0), (0, 1, 0)),
    2: (1, 1, (1, 2, 1), (1, 1, 1), (1, 1, 1)),
    3: (1, 3, (1, 2, 3), (1, 1, 3), (1, 1, 3)),
    4: (0, 1, (1, 1, 1), (1, 1, 1), (0, 0, 1)),
    5: (0, 1, (0, 1, 0), (0, 1, 0), (0, 0, 0)),
}

# Rows of the genus-1 table whose nu entry is independently computed data
# rather than forced by zero dimensions.
GENUS1_BOXED_NU = (2, 3)

# Recorded genus-2 boundary data, rows r = 0..11, same column layout.
GENUS2_ROWS = {
    0: (1, 1, (1, 1, 1), (0, 0, 1), (1, 1, 1)),
    1: (0, 0, (0, 0, 0), (0, 0, 0), (0, 0, 0)),
    2: (1, 1, (1, 2, 1), (1, 1, 1), (1, 1, 1)),
    3: (5, 4, (4, 5, 4), (0, 0, 4), (4, 5, 4)),
    4: (5, 1, (1, 6, 1), (1, 1, 1), (1, 5, 1)),
    5: (5, 5, (5, 10, 5), (5, 5, 5), (5, 5, 5)),
    6: (5, 11, (5, 10, 11), (5, 5, 11), (5, 5, 11)),
    7: (1, 5, (5, 6, 5), (5, 5, 5), (1, 1, 5)),
    8: (0, 1, (1, 5, 1), (1, 5, 1), (0, 0, 1)),
    9: (1, 1, (1, 2, 1), (1, 1, 1), (1, 1, 1)),
    10: (0, 0, (0, 0, 0), (0, 0, 0), (0, 0, 0)),
    11: (0, 0, (0, 1, 0), (0, 1, 0), (0, 0, 0)),
}

GENUS2_BOXED_NU = (2, 4, 5, 6, 7, 9)

# Recorded rows for the genus 2+2 splitting of the genus-4 space,
# degrees r = 0..21: target Betti numbers, cokernel and kernel sizes of the
# connecting map at each degree.
SPLIT22_H4 = (1, 0, 1, 8, 1, 8, 29, 9, 37, 93, 93, 93, 93, 37, 9, 29, 8, 1, 8, 1, 0, 1)
SPLIT22_COKER = (1, 0, 1, 8, 1, 8, 29, 8, 29, 68, 85, 68, 85, 20, 1, 12, 0, 0, 0, 0, 0, 0)
SPLIT22_KER = (0, 0, 0, 0, 0, 0, 1, 8, 25, 8, 25, 8, 17, 8, 17, 8, 1, 8, 1, 0, 1, 0)
