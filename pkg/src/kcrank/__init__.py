"""Exact k-crank distributions of k-colored partitions and finite-order checks
of their inequalities, moment positivity and unimodality."""

from .bivariate import BivariateSeries, crank_gf, to_table
from .errors import (
    BadModuli,
    BudgetExceeded,
    CacheError,
    EmptyPartition,
    KCrankError,
    NeedsTwoComponents,
    NonUnitConstant,
    NotDivisible,
    OrderExceeded,
)
from .moments import gen_binom, mu_symmetrized, mu_weighted_direct, mu_weighted_gf1, mu_weighted_gf2
from .qexpr import evaluate, expand, parse
from .series import PochhammerSpec, QSeries, invert, j_product, pochhammer, unit
from .tables import KCrankTable, ResidueTable, build, get_table, residue_difference_series, residues

__version__ = "0.1.0"
