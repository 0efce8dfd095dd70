"""
Converting published A-values to efficiency factors
===================================================

Average pairwise variances of check-versus-entry contrasts convert to E_con
via E = 2 / (k A). Example 2's optimal v=12, k=3 contraction also gives the
test-entry variance directly.
"""

from augdesign import e_con_from_a_abd, e_res, e_test
from augdesign.formulas import a_test
from augdesign.reference import TABLE2

for r in TABLE2:
    e = e_con_from_a_abd(r.k, r.a_abd)
    print(f"v={r.v:>2} k={r.k}  A={r.a_abd:.4f}  E_con={e:.6f}  (table {r.e_con})")

# the 0.9167 row: the table's 0.7273 matches 11/12 exactly, not the rounded 0.9167
print("E_con from A = 11/12:", round(e_con_from_a_abd(3, 11 / 12), 6))

print("A_test for v=12, k=3, E_con=0.68006:", round(a_test(e_test(12, 3, 0.68006)), 4))
print("E of the two-replicate resolvable design for 36 treatments:", round(e_res(12, 3, 0.68006), 6))
