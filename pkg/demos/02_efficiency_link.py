"""
Augmented-design efficiency follows from contraction efficiency
================================================================

The average efficiency factor of the full v x v design (checks and test
entries) is a closed-form function of E_con. Here the closed form is set
against a direct eigen-decomposition of the v* x v* information matrix.
"""

import numpy as np

from augdesign import (
    augment,
    augmented_cefs,
    contraction_cefs,
    cyclic_contraction,
    e_aug,
    e_test,
    fill_entries,
    verify_spectrum,
)
from augdesign.formulas import a_test

c = cyclic_contraction(5, {1, 2, 3})
con = contraction_cefs(c)
print("contraction cefs:", np.round(con.cefs, 6), " E_con =", round(con.e, 6))

d = fill_entries(augment(c), seed=1)
aug = augmented_cefs(d)
print("augmented cefs:  ", np.round(aug.cefs, 6))
print("E_aug direct  =", round(aug.e, 8))
print("E_aug formula =", round(e_aug(5, 3, con.e), 8))

# each contraction cef theta splits into (k/v)(1 -/+ sqrt(1 - theta)); the rest are 1
rep = verify_spectrum(c, d)
print("pairing holds:", rep.passed, " max deviation", f"{rep.max_deviation:.1e}")

# the test entries alone, and their average pairwise variance
et = e_test(5, 3, con.e)
print("E_test =", round(et, 6), " A_test =", round(a_test(et), 4))

# entry placement cannot change the spectrum
print({round(augmented_cefs(fill_entries(augment(c), s)).e, 12) for s in range(5)})
