"""Closed forms for the root-of-unity sums behind the inner products.

Every inner product against a principal or discrete series character reduces
to a sum of eps^(+-tka) over split torus indices or eta0^(+-tjb) over
nonsplit ones, where eps and eta0 are primitive roots of unity of order q-1
and q+1.  Each parity case has its own index ranges, and the odd cases add a
half-index term.  closed_sum gives the evaluated branch form, direct_sum the
literal sum; lemma_sweep checks them against each other exhaustively.

Two degenerate branch values are corrected here relative to their usual
printed forms (the summand counts force them, and direct evaluation
confirms):
  * q = 3 (mod 4), nonsplit, (q+1) | tj: every root is 1, so the sum is the
    number of summands, 2 * (q-3)/4 = (q-3)/2, not (q+1)/2.
  * q = 1 (mod 4), split, (q-1) | tk: 2 * (q-5)/4 ones plus the doubled half
    term gives (q-5)/2 + 2 = (q-1)/2, not (q+1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, integer, root
from .tables import EVEN, ONE_MOD_4, THREE_MOD_4, GroupParams, group_params


@dataclass(frozen=True)
class SumSpec:
    """A legal (case, torus kind, character index, power) combination."""

    params: GroupParams
    kind: str  # "split" (eps, index k) or "nonsplit" (eta0, index j)
    index: int
    t: int


def split_indices(params: GroupParams) -> range:
    """Legal principal-series indices k for this case."""
    q = params.q
    if params.case == EVEN:
        return range(1, q // 2)
    if params.case == THREE_MOD_4:
        return range(2, (q - 3) // 2 + 1, 2)
    return range(2, (q - 5) // 2 + 1, 2)


def nonsplit_indices(params: GroupParams) -> range:
    """Legal discrete-series indices j for this case."""
    q = params.q
    if params.case == EVEN:
        return range(1, q // 2 + 1)
    if params.case == THREE_MOD_4:
        return range(2, (q - 3) // 2 + 1, 2)
    return range(2, (q - 1) // 2 + 1, 2)


def make_spec(q: int, kind: str, index: int, t: int) -> SumSpec:
    params = group_params(q)
    if kind not in ("split", "nonsplit"):
        raise ValueError(f"kind must be 'split' or 'nonsplit', got {kind!r}")
    legal = split_indices(params) if kind == "split" else nonsplit_indices(params)
    if index not in legal:
        raise ValueError(f"index {index} is not legal for {kind} at q={q}")
    if t < 1:
        raise ValueError(f"power must be positive, got {t}")
    return SumSpec(params, kind, index, t)


def direct_sum(spec: SumSpec) -> Cyclotomic:
    """The literal sum of roots of unity, term by term."""
    q = spec.params.q
    ti = spec.t * spec.index
    if spec.kind == "split":
        n = q - 1
        if spec.params.case == EVEN:
            top = q // 2 - 1
        elif spec.params.case == THREE_MOD_4:
            top = (q - 3) // 4
        else:
            top = (q - 5) // 4
    else:
        n = q + 1
        if spec.params.case == EVEN:
            top = q // 2
        elif spec.params.case == THREE_MOD_4:
            top = (q - 3) // 4
        else:
            top = (q - 1) // 4
    total = integer(0)
    for a in range(1, top + 1):
        total = total + root(n, ti * a) + root(n, -ti * a)
    if spec.kind == "split" and spec.params.case == ONE_MOD_4:
        # the split range stops short of the half index (q-1)/4, whose class
        # is half-sized; the sum carries it with weight 2
        total = total + 2 * root(n, (q - 1) // 4 * ti)
    return total


def closed_sum(spec: SumSpec) -> Cyclotomic:
    """The case-by-case closed form of direct_sum."""
    q = spec.params.q
    ti = spec.t * spec.index
    case = spec.params.case
    if spec.kind == "split":
        if ti % (q - 1) == 0:
            return integer({EVEN: q - 2,
                            THREE_MOD_4: (q - 3) // 2,
                            ONE_MOD_4: (q - 1) // 2}[case])
        if case == ONE_MOD_4:
            return integer(-1 + (-1) ** (ti // 2))
        return integer(-1)
    if ti % (q + 1) == 0:
        return integer({EVEN: q,
                        THREE_MOD_4: (q - 3) // 2,
                        ONE_MOD_4: (q - 1) // 2}[case])
    if case == THREE_MOD_4:
        return integer(-1) - root(q + 1, (q + 1) // 4 * ti)
    return integer(-1)


@dataclass(frozen=True)
class Counterexample:
    q: int
    kind: str
    index: int
    t: int
    direct: str
    closed: str


@dataclass(frozen=True)
class LemmaSweepReport:
    q: int
    case: str
    t_max: int
    checked: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def lemma_sweep(q: int, t_max: int = 12) -> LemmaSweepReport:
    """Compare closed_sum with direct_sum over every legal spec up to t_max."""
    params = group_params(q)
    checked = 0
    bad = []
    for kind, indices in (("split", split_indices(params)),
                          ("nonsplit", nonsplit_indices(params))):
        for index in indices:
            for t in range(1, t_max + 1):
                spec = SumSpec(params, kind, index, t)
                d = direct_sum(spec)
                c = closed_sum(spec)
                checked += 1
                if d != c:
                    bad.append(Counterexample(q, kind, index, t, d.text(), c.text()))
    return LemmaSweepReport(q, params.case, t_max, checked, tuple(bad))
