"""Exact Hall algebras over F_q: Ringel-Hall, derived and periodic derived.

The main entry points:

    category(quiver, q)              iso classes, Hom/Ext, Hall numbers
    HallAlgebra, ExtendedHallAlgebra
    PeriodicExtendedAlgebra(cat, m)  the m-periodic extended derived Hall algebra
    OddPeriodicAlgebra(cat, m)       the odd-periodic derived Hall algebra
    oracle_for(cat)                  brute-force counting with complexes of projectives
"""

from .derived import StalkSum
from .ffla import BudgetExceeded
from .hall import ExtendedHallAlgebra, HallAlgebra
from .oracle import oracle_for
from .periodic import OddPeriodicAlgebra, PeriodicExtendedAlgebra
from .repcat import Category, IsoClassId, Quiver, category
from .scalars import Scalar

__all__ = [
    "BudgetExceeded",
    "Category",
    "ExtendedHallAlgebra",
    "HallAlgebra",
    "IsoClassId",
    "OddPeriodicAlgebra",
    "PeriodicExtendedAlgebra",
    "Quiver",
    "Scalar",
    "StalkSum",
    "category",
    "oracle_for",
]
