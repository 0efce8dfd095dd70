"""Augmented designs in square arrays, built from k x v contractions.

A contraction is a k x v Latin rectangle. Read its columns as incomplete
blocks and it is a block design for v treatments. Swapping the roles of
rows and treatments places k check varieties in a v x v array. The
remaining cells take unreplicated test entries. The average efficiency
factor of the augmented design is a closed-form function of that of the
contraction, so the best contraction gives the best augmented design.
"""

from .construct import (
    augment,
    augmented_from_csv,
    augmented_to_csv,
    best_cyclic,
    cyclic_contraction,
    fill_entries,
    read_augmented_csv,
    write_augmented_csv,
)
from .designs import (
    AugmentedDesign,
    Contraction,
    EfficiencyReport,
    incidence,
    load_contraction,
    save_contraction,
    validate_contraction,
)
from .errors import (
    AugDesignError,
    BadBlock,
    BadDimensions,
    Disconnected,
    DuplicateInColumn,
    InvalidDesign,
    RowNotPermutation,
    TargetUnreached,
)
from .formulas import DesignParams, a_test, e_aug, e_con_from_a_abd, e_res, e_test, v_star
from .search import SearchConfig, SearchResult, search_contraction
from .spectra import (
    augmented_cefs,
    contraction_cefs,
    harmonic_mean,
    jacobi_eigenvalues,
    symmetric_eigenvalues,
)
from .verify import VerificationReport, verify_formula, verify_spectrum

__version__ = "0.1.0"
