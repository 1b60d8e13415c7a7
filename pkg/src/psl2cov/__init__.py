"""Exact character tables of PSL(2,q) and character covering numbers.

Everything is computed in exact cyclotomic arithmetic; no floats enter any
decision.  The main entry points:

- :func:`group_params` / :func:`character_table` build the table for a
  prime power q >= 4,
- :func:`decompose` expresses a product of characters in the irreducible
  basis,
- :func:`covering_report` computes e and t numbers and the covering number,
- :func:`run_verification` runs structural checks, closed-form sums,
  reference-value comparisons, and optionally an explicit matrix-group
  oracle.
"""

from .covering import (
    CoveringReport,
    Decomposition,
    covering_report,
    decompose,
    e_number,
    inner_product,
    t_number,
    theorem_expected,
)
from .cyclotomic import Cyclotomic, root
from .oracle import run_oracle
from .rootsums import lemma_sweep
from .tables import (
    CharacterTable,
    GroupParams,
    NotAPrimePower,
    character_table,
    group_params,
    prime_power,
)
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "Cyclotomic",
    "CoveringReport",
    "Decomposition",
    "GroupParams",
    "NotAPrimePower",
    "character_table",
    "covering_report",
    "decompose",
    "e_number",
    "group_params",
    "inner_product",
    "lemma_sweep",
    "prime_power",
    "root",
    "run_oracle",
    "run_verification",
    "t_number",
    "theorem_expected",
    "__version__",
]
