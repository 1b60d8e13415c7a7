"""Conjugacy data and exact complex character tables of PSL(2,q).

The table comes in three shapes.  For even q there is one unipotent class N
and no half classes.  For odd q the unipotent elements split into N and N',
and exactly one torus class is "halved": the split class S((q-1)/4) when
q = 1 (mod 4), the nonsplit class T((q+1)/4) when q = 3 (mod 4).  Matching
that, odd q has two characters of degree (q +- 1)/2 whose values involve
omega = (1 + sqrt(+-q))/2, realized exactly inside Z[zeta_p] by a quadratic
Gauss sum.

Character labels follow a fixed grammar used across the package and the CLI:
"triv", "st" (degree q), "pp:k" (principal series, degree q+1), "dd:j"
(discrete series, degree q-1), "half+:1"/"half+:2" (degree (q+1)/2, q = 1
mod 4), "half-:1"/"half-:2" (degree (q-1)/2, q = 3 mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cyclotomic import Cyclotomic, factorize, root

EVEN = "even"
ONE_MOD_4 = "1mod4"
THREE_MOD_4 = "3mod4"


class NotAPrimePower(ValueError):
    """q is not a prime power, or is below the smallest supported value 4."""


class CaseMismatch(ValueError):
    """An operation specific to one parity case was asked of another."""


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, m) with q = p^m, or None if q is not a prime power >= 2."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, m),) = f.items()
    return p, m


@dataclass(frozen=True)
class GroupParams:
    """Shape constants of PSL(2,q) used everywhere downstream."""

    q: int
    p: int
    m: int
    case: str
    order: int
    num_classes: int
    conductor: int


def group_params(q: int) -> GroupParams:
    """Parameters of PSL(2,q) for a prime power q >= 4.

    >>> group_params(8).order, group_params(8).num_classes
    (504, 9)
    >>> group_params(11).case
    '3mod4'
    """
    pm = prime_power(q)
    if pm is None or q < 4:
        raise NotAPrimePower(f"q must be a prime power >= 4, got {q}")
    p, m = pm
    if p == 2:
        case = EVEN
        order = q * (q * q - 1)
        num_classes = q + 1
        conductor = lcm(q - 1, q + 1)
    else:
        case = ONE_MOD_4 if q % 4 == 1 else THREE_MOD_4
        order = q * (q * q - 1) // 2
        num_classes = (q + 5) // 2
        conductor = lcm(q - 1, q + 1, p)
    return GroupParams(q, p, m, case, order, num_classes, conductor)


@dataclass(frozen=True)
class ConjugacyClass:
    """One class: kind, torus parameter (None for I/N/N'), and size."""

    kind: str
    param: int | None
    size: int

    @property
    def name(self) -> str:
        if self.kind == "identity":
            return "I"
        if self.kind == "unipotent":
            return "N"
        if self.kind == "unipotent_prime":
            return "N'"
        if self.kind in ("split", "split_half"):
            return f"S({self.param})"
        return f"T({self.param})"


def conjugacy_data(params: GroupParams) -> tuple[ConjugacyClass, ...]:
    """Classes in fixed display order: I, unipotent(s), split torus, nonsplit torus."""
    q = params.q
    if params.case == EVEN:
        out = [ConjugacyClass("identity", None, 1),
               ConjugacyClass("unipotent", None, q * q - 1)]
        out += [ConjugacyClass("split", a, q * (q + 1)) for a in range(1, q // 2)]
        out += [ConjugacyClass("nonsplit", b, q * (q - 1)) for b in range(1, q // 2 + 1)]
    else:
        half = (q * q - 1) // 2
        out = [ConjugacyClass("identity", None, 1),
               ConjugacyClass("unipotent", None, half),
               ConjugacyClass("unipotent_prime", None, half)]
        if params.case == ONE_MOD_4:
            out += [ConjugacyClass("split", a, q * (q + 1))
                    for a in range(1, (q - 5) // 4 + 1)]
            out.append(ConjugacyClass("split_half", (q - 1) // 4, q * (q + 1) // 2))
            out += [ConjugacyClass("nonsplit", b, q * (q - 1))
                    for b in range(1, (q - 1) // 4 + 1)]
        else:
            out += [ConjugacyClass("split", a, q * (q + 1))
                    for a in range(1, (q - 3) // 4 + 1)]
            out += [ConjugacyClass("nonsplit", b, q * (q - 1))
                    for b in range(1, (q - 3) // 4 + 1)]
            out.append(ConjugacyClass("nonsplit_half", (q + 1) // 4, q * (q - 1) // 2))
    assert len(out) == params.num_classes
    assert sum(c.size for c in out) == params.order
    return tuple(out)


def omega_values(params: GroupParams) -> tuple[Cyclotomic, Cyclotomic]:
    """(omega, omega*) with omega = (1 + sqrt(q))/2 for q = 1 (mod 4) and
    omega = (1 + sqrt(-q))/2 for q = 3 (mod 4), exact in Z[zeta_p].

    For q = p^m with m odd the square root comes from the Gauss sum
    g = sum_t (t|p) zeta_p^t, which satisfies g^2 = (-1)^((p-1)/2) p; for m
    even, sqrt(q) = p^(m/2) is rational.  Either way omega + omega* = 1 and
    omega * omega* = (1 -+ q)/4 exactly.

    >>> [v.as_integer() for v in omega_values(group_params(9))]
    [2, -1]
    """
    if params.case == EVEN:
        raise CaseMismatch("omega values exist only for odd q")
    p, m = params.p, params.m
    if m % 2 == 0:
        c = p ** (m // 2)
        return Cyclotomic.constant((1 + c) // 2), Cyclotomic.constant((1 - c) // 2)
    c = p ** ((m - 1) // 2)
    residues = {t * t % p for t in range(1, p)}
    terms = {t: c for t in residues}
    terms[0] = terms.get(0, 0) + (1 + c) // 2
    omega = Cyclotomic(p, terms)
    return omega, 1 - omega


@dataclass(frozen=True)
class Character:
    """One irreducible character: label, degree, and exact values per class."""

    label: str
    degree: int
    values: tuple[Cyclotomic, ...]


class CharacterTable:
    """Classes and irreducible characters of PSL(2,q), in fixed order.

    All values share the conductor params.conductor, so inner products never
    promote.  Lookup is by label; conjugated value rows are cached since the
    inner product machinery asks for them repeatedly.
    """

    def __init__(self, params: GroupParams, classes: tuple[ConjugacyClass, ...],
                 characters: tuple[Character, ...]):
        self.params = params
        self.classes = classes
        self.characters = characters
        self.sizes = tuple(c.size for c in classes)
        self.class_names = tuple(c.name for c in classes)
        self._by_label = {ch.label: ch for ch in characters}
        self._by_class = {c.name: i for i, c in enumerate(classes)}
        self._conj: dict[str, tuple[Cyclotomic, ...]] = {}

    def character(self, label: str) -> Character:
        ch = self._by_label.get(label)
        if ch is None:
            raise KeyError(f"no character labelled {label!r} for q={self.params.q}")
        return ch

    def labels(self) -> tuple[str, ...]:
        return tuple(ch.label for ch in self.characters)

    def class_index(self, name: str) -> int:
        i = self._by_class.get(name)
        if i is None:
            raise KeyError(f"no class named {name!r} for q={self.params.q}")
        return i

    def conj_values(self, label: str) -> tuple[Cyclotomic, ...]:
        vals = self._conj.get(label)
        if vals is None:
            vals = tuple(v.conjugate() for v in self.character(label).values)
            self._conj[label] = vals
        return vals


def principal_indices(params: GroupParams) -> tuple[int, ...]:
    """Valid k for pp:k."""
    q = params.q
    if params.case == EVEN:
        return tuple(range(1, q // 2))
    if params.case == ONE_MOD_4:
        return tuple(range(2, (q - 5) // 2 + 1, 2))
    return tuple(range(2, (q - 3) // 2 + 1, 2))


def discrete_indices(params: GroupParams) -> tuple[int, ...]:
    """Valid j for dd:j."""
    q = params.q
    if params.case == EVEN:
        return tuple(range(1, q // 2 + 1))
    if params.case == ONE_MOD_4:
        return tuple(range(2, (q - 1) // 2 + 1, 2))
    return tuple(range(2, (q - 3) // 2 + 1, 2))


def character_table(params: GroupParams) -> CharacterTable:
    """The full exact character table, rows in fixed label order."""
    q = params.q
    n = params.conductor
    classes = conjugacy_data(params)

    def cn(c: int) -> Cyclotomic:
        return Cyclotomic(n, {0: c} if c else {})

    def eps(e: int) -> Cyclotomic:
        return Cyclotomic(n, {(n // (q - 1)) * e % n: 1})

    def eta(e: int) -> Cyclotomic:
        return Cyclotomic(n, {(n // (q + 1)) * e % n: 1})

    chars: list[Character] = []

    if params.case == EVEN:
        a_rng = range(1, q // 2)
        b_rng = range(1, q // 2 + 1)
        chars.append(Character("triv", 1, tuple(cn(1) for _ in classes)))
        chars.append(Character("st", q, (cn(q), cn(0),
                                         *(cn(1) for _ in a_rng),
                                         *(cn(-1) for _ in b_rng))))
        for k in principal_indices(params):
            chars.append(Character(f"pp:{k}", q + 1, (cn(q + 1), cn(1),
                                                      *(eps(a * k) + eps(-a * k) for a in a_rng),
                                                      *(cn(0) for _ in b_rng))))
        for j in discrete_indices(params):
            chars.append(Character(f"dd:{j}", q - 1, (cn(q - 1), cn(-1),
                                                      *(cn(0) for _ in a_rng),
                                                      *(-(eta(b * j) + eta(-b * j)) for b in b_rng))))
    else:
        omega, omega_star = omega_values(params)
        w = omega.promoted(n)  # p | n for odd q, so this always works
        ws = omega_star.promoted(n)
        if params.case == ONE_MOD_4:
            a_rng = range(1, (q - 5) // 4 + 1)
            b_rng = range(1, (q - 1) // 4 + 1)
            chars.append(Character("triv", 1, tuple(cn(1) for _ in classes)))
            chars.append(Character("st", q, (cn(q), cn(0), cn(0),
                                             *(cn(1) for _ in a_rng), cn(1),
                                             *(cn(-1) for _ in b_rng))))
            for k in principal_indices(params):
                chars.append(Character(f"pp:{k}", q + 1, (cn(q + 1), cn(1), cn(1),
                                                          *(eps(a * k) + eps(-a * k) for a in a_rng),
                                                          2 * eps((q - 1) * k // 4),
                                                          *(cn(0) for _ in b_rng))))
            for j in discrete_indices(params):
                chars.append(Character(f"dd:{j}", q - 1, (cn(q - 1), cn(-1), cn(-1),
                                                          *(cn(0) for _ in a_rng), cn(0),
                                                          *(-(eta(b * j) + eta(-b * j)) for b in b_rng))))
            sign_half = cn((-1) ** ((q - 1) // 4))
            for lbl, u, v in (("half+:1", w, ws), ("half+:2", ws, w)):
                chars.append(Character(lbl, (q + 1) // 2, (cn((q + 1) // 2), u, v,
                                                           *(cn((-1) ** a) for a in a_rng),
                                                           sign_half,
                                                           *(cn(0) for _ in b_rng))))
        else:
            a_rng = range(1, (q - 3) // 4 + 1)
            b_rng = range(1, (q - 3) // 4 + 1)
            chars.append(Character("triv", 1, tuple(cn(1) for _ in classes)))
            chars.append(Character("st", q, (cn(q), cn(0), cn(0),
                                             *(cn(1) for _ in a_rng),
                                             *(cn(-1) for _ in b_rng), cn(-1))))
            for k in principal_indices(params):
                chars.append(Character(f"pp:{k}", q + 1, (cn(q + 1), cn(1), cn(1),
                                                          *(eps(a * k) + eps(-a * k) for a in a_rng),
                                                          *(cn(0) for _ in b_rng), cn(0))))
            for j in discrete_indices(params):
                chars.append(Character(f"dd:{j}", q - 1, (cn(q - 1), cn(-1), cn(-1),
                                                          *(cn(0) for _ in a_rng),
                                                          *(-(eta(b * j) + eta(-b * j)) for b in b_rng),
                                                          -2 * eta((q + 1) * j // 4))))
            sign_half = cn((-1) ** ((q + 5) // 4))
            for lbl, u, v in (("half-:1", -ws, -w), ("half-:2", -w, -ws)):
                chars.append(Character(lbl, (q - 1) // 2, (cn((q - 1) // 2), u, v,
                                                           *(cn(0) for _ in a_rng),
                                                           *(cn((-1) ** (b + 1)) for b in b_rng),
                                                           sign_half)))

    assert len(chars) == params.num_classes
    assert sum(ch.degree * ch.degree for ch in chars) == params.order
    return CharacterTable(params, classes, chars)


def center_classes(chi: Character, table: CharacterTable) -> frozenset[str]:
    """Class names where |chi(g)| equals the degree, i.e. the center of chi."""
    d2 = chi.degree * chi.degree
    out = []
    for cls, v in zip(table.classes, chi.values):
        if (v * v.conjugate()).as_integer() == d2:
            out.append(cls.name)
    return frozenset(out)
