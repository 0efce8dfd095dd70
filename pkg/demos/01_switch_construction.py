"""
From a 3 x 5 contraction to a 5 x 5 augmented design
=====================================================

Three check varieties (A, B, C) are placed in a 5 x 5 field so that each
appears once per row and once per column. The contraction's row labels
become the checks, and its treatment labels become field-row positions.
"""

import numpy as np

from augdesign import Contraction, augment, augmented_to_csv, fill_entries, incidence

# rows are the checks A, B, C; each row is a complete replicate of 1..5
c = Contraction.from_rows([
    [2, 4, 5, 1, 3],
    [5, 3, 2, 4, 1],
    [1, 2, 3, 5, 4],
])

# check positions only: blank cells await the test entries
layout = augment(c)
for row in layout.labels():
    print(" ".join(f"{x or '.':>3}" for x in row))

# the check-position matrix is exactly the contraction's incidence matrix
print(np.array_equal(layout.check_positions(), incidence(c)))

# fill the 10 blanks with unreplicated test entries; the seed fixes the layout
design = fill_entries(layout, seed=2025)
print(augmented_to_csv(design))
