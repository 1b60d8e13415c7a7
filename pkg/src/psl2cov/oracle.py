"""Explicit matrix-group oracle for the parametric class data.

Builds F_q and F_{q^2} from scratch with deterministically chosen moduli,
enumerates PSL(2,q) as canonicalized 2x2 matrices, partitions it into
conjugacy classes by orbit search under a generating set, and matches the
result against the parametric classes: same group order, same class count,
same size multiset, and each constructed representative (identity, the two
unipotents, diag(sigma^a, sigma^-a), the companion matrix of the nonsplit
trace) landing in a distinct explicit class of the predicted size.  The
second-orthogonality check then ties the character table to the explicit
class sizes: sum over chi of |chi(g)|^2 must equal the centralizer order.

Everything is exact, and deliberately independent of the parametric size
formulas: the only shared inputs are q and the class labels.  The work grows
like q^3, so callers must raise the cap knowingly for q beyond DEFAULT_CAP.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import factorize
from .tables import CharacterTable, GroupParams, conjugacy_data, group_params, prime_power

DEFAULT_CAP = 32

Mat = tuple[int, int, int, int]


class CapExceeded(RuntimeError):
    def __init__(self, q: int, cap: int):
        super().__init__(f"explicit enumeration of PSL(2,{q}) exceeds the cap {cap}")
        self.q = q
        self.cap = cap


class MatchFailure(RuntimeError):
    """The explicit group disagreed with the parametric data."""


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p (coefficient tuples, low degree first).
# ---------------------------------------------------------------------------


def _pnorm(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmod(a: tuple[int, ...], f: tuple[int, ...], p: int) -> tuple[int, ...]:
    # f is monic
    r = list(a)
    df = len(f) - 1
    while len(r) - 1 >= df and r:
        lead = r[-1] % p
        shift = len(r) - 1 - df
        if lead:
            for i, fc in enumerate(f):
                r[shift + i] = (r[shift + i] - lead * fc) % p
        r.pop()
    return _pnorm(r)


def _pmulmod(a, b, f, p) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(_pnorm(out), f, p)


def _pgcd(a, b, p) -> tuple[int, ...]:
    while b:
        # make b monic before reducing
        lead_inv = pow(b[-1], p - 2, p)
        bm = tuple((c * lead_inv) % p for c in b)
        a, b = b, _pmod(a, bm, p)
    return a


def _frobenius(h, f, p) -> tuple[int, ...]:
    """h^p mod f by square and multiply."""
    out = (1,)
    base = h
    e = p
    while e:
        if e & 1:
            out = _pmulmod(out, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return out


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Rabin test for a monic polynomial over F_p."""
    m = len(f) - 1
    x = _pmod((0, 1), f, p)
    h = x
    for _ in range(m):
        h = _frobenius(h, f, p)
    if h != x:
        return False
    for r in factorize(m):
        h = x
        for _ in range(m // r):
            h = _frobenius(h, f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _pnorm(diff), p)
        if len(g) - 1 != 0:
            return False
    return True


def _first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree m, ordering the non-leading
    coefficients as base-p digits of an ascending index."""
    if m == 1:
        return (0, 1)
    for idx in range(p**m):
        coeffs = []
        e = idx
        for _ in range(m):
            coeffs.append(e % p)
            e //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible of degree {m} over F_{p}")


# ---------------------------------------------------------------------------
# F_q and F_{q^2}, elements encoded as integers.
# ---------------------------------------------------------------------------


class Field:
    """F_q with elements 0..q-1; base-p digits are polynomial coefficients,
    low degree first, modulo the first irreducible of degree m."""

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise ValueError(f"q must be a prime power, got {q}")
        self.q = q
        self.p, self.m = pm
        self.modulus = _first_irreducible(self.p, self.m)
        enc, dec = self._encode, self._decode
        self.add_table = [
            [enc([(x + y) % self.p for x, y in zip(dec(a), dec(b))])
             for b in range(q)]
            for a in range(q)
        ]
        self.mul_table = [
            [enc(_pmulmod(_pnorm(list(dec(a))), _pnorm(list(dec(b))),
                          self.modulus, self.p))
             for b in range(q)]
            for a in range(q)
        ]
        self.neg_table = [enc([(-x) % self.p for x in dec(a)]) for a in range(q)]

    def _decode(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs) + [0] * (self.m - len(coeffs))):
            out = out * self.p + c
        return out

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 if e == 0 else 0
        e %= self.q - 1
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def nonsquare(self) -> int:
        """Lowest-encoded nonzero nonsquare (odd q only)."""
        squares = {self.mul(a, a) for a in range(1, self.q)}
        for a in range(1, self.q):
            if a not in squares:
                return a
        raise ValueError(f"every element of F_{self.q} is a square")


class Ext:
    """F_{q^2} as F_q[y] modulo the first irreducible y^2 + b y + c;
    elements 0..q^2-1 encode (e0, e1) as e0 + e1*q."""

    def __init__(self, field: Field):
        self.field = field
        q = field.q
        for idx in range(q * q):
            c, b = idx % q, idx // q
            if all(field.add(field.mul(t, field.add(t, b)), c) != 0 for t in range(q)):
                self.b, self.c = b, c
                break
        else:
            raise AssertionError(f"no irreducible quadratic over F_{q}")

    def add(self, x: int, y: int) -> int:
        F, q = self.field, self.field.q
        return F.add(x % q, y % q) + F.add(x // q, y // q) * q

    def mul(self, x: int, y: int) -> int:
        F, q = self.field, self.field.q
        x0, x1 = x % q, x // q
        y0, y1 = y % q, y // q
        # y^2 = -b y - c
        hi = F.mul(x1, y1)
        e0 = F.sub(F.mul(x0, y0), F.mul(hi, self.c))
        e1 = F.sub(F.add(F.mul(x0, y1), F.mul(x1, y0)), F.mul(hi, self.b))
        return e0 + e1 * q

    def pow(self, x: int, e: int) -> int:
        out = 1
        base = x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def order(self, x: int) -> int:
        """Multiplicative order of a nonzero element."""
        n = self.field.q**2 - 1
        order = n
        for r in factorize(n):
            while order % r == 0 and self.pow(x, order // r) == 1:
                order //= r
        return order

    def generator(self) -> int:
        """Lowest-encoded element of full multiplicative order q^2 - 1."""
        n = self.field.q**2 - 1
        for cand in range(2, self.field.q**2):
            if all(self.pow(cand, n // r) != 1 for r in factorize(n)):
                return cand
        raise AssertionError("no generator found")

    def base_part(self, x: int) -> int:
        """The F_q coordinate of an element asserted to lie in F_q."""
        q = self.field.q
        if x // q:
            raise MatchFailure(f"element {x} of F_{q}^2 should lie in F_{q}")
        return x % q


# ---------------------------------------------------------------------------
# PSL(2,q) as canonical matrices.
# ---------------------------------------------------------------------------


def _canon(field: Field, m: Mat) -> Mat:
    n = (field.neg(m[0]), field.neg(m[1]), field.neg(m[2]), field.neg(m[3]))
    return min(m, n)


def _mmul(field: Field, x: Mat, y: Mat) -> Mat:
    mul, add = field.mul, field.add
    return (add(mul(x[0], y[0]), mul(x[1], y[2])),
            add(mul(x[0], y[1]), mul(x[1], y[3])),
            add(mul(x[2], y[0]), mul(x[3], y[2])),
            add(mul(x[2], y[1]), mul(x[3], y[3])))


def _minv(m: Mat, field: Field) -> Mat:
    # determinant 1
    return (m[3], field.neg(m[1]), field.neg(m[2]), m[0])


def enumerate_group(field: Field) -> frozenset[Mat]:
    """All of PSL(2,q): canonicalized determinant-1 matrices."""
    q = field.q
    out = set()
    inv = [0] + [field.inv(a) for a in range(1, q)]
    one = 1
    for a in range(1, q):
        ia = inv[a]
        for b in range(q):
            for c in range(q):
                d = field.mul(ia, field.add(one, field.mul(b, c)))
                out.add(_canon(field, (a, b, c, d)))
    for b in range(1, q):
        c = field.neg(inv[b])
        for d in range(q):
            out.add(_canon(field, (0, b, c, d)))
    return frozenset(out)


def _generators(field: Field) -> list[tuple[Mat, Mat]]:
    """A generating set of PSL(2,q) with inverses: two unipotents (steps 1
    and s, s a multiplicative generator, so their diagonal conjugates span
    all of F_q), the Weyl element, and the torus generator diag(s, 1/s)."""
    q = field.q
    n = q - 1
    s = next(cand for cand in range(2, q)
             if all(field.pow(cand, n // r) != 1 for r in factorize(n)))
    gens = [(1, 1, 0, 1), (1, s, 0, 1), (0, 1, field.neg(1), 0),
            (s, 0, 0, field.inv(s))]
    return [(g, _minv(g, field)) for g in gens]


@dataclass(frozen=True)
class ExplicitClass:
    rep: Mat
    size: int


def conjugacy_partition(field: Field, group: frozenset[Mat]):
    """Orbit partition under conjugation; deterministic class ids."""
    gens = _generators(field)
    class_of: dict[Mat, int] = {}
    classes: list[ExplicitClass] = []
    for seed in sorted(group):
        if seed in class_of:
            continue
        orbit = {seed}
        stack = [seed]
        while stack:
            x = stack.pop()
            for g, ginv in gens:
                y = _canon(field, _mmul(field, _mmul(field, g, x), ginv))
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        cid = len(classes)
        for y in orbit:
            class_of[y] = cid
        classes.append(ExplicitClass(min(orbit), len(orbit)))
    return class_of, classes


def psl_order(field: Field, m: Mat) -> int:
    identity = (1, 0, 0, 1)
    x = _canon(field, m)
    k = 1
    while x != identity:
        x = _canon(field, _mmul(field, x, m))
        k += 1
    return k


# ---------------------------------------------------------------------------
# Matching against the parametric data.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchedClass:
    name: str
    size: int
    element_order: int


@dataclass(frozen=True)
class OracleReport:
    q: int
    group_size: int
    field_modulus: tuple[int, ...]
    classes: tuple[MatchedClass, ...]
    second_orthogonality: tuple[tuple[str, int], ...] | None  # (name, centralizer)


def _parametric_reps(params: GroupParams, field: Field, ext: Ext) -> dict[str, Mat]:
    """One explicit matrix per parametric class name."""
    q = params.q
    tau = ext.generator()
    sigma = ext.base_part(ext.pow(tau, q + 1))
    tau0 = ext.pow(tau, q - 1)
    if ext.order(ext.pow(tau, q + 1)) != q - 1 or ext.order(tau0) != q + 1:
        raise MatchFailure(f"torus generators have wrong order at q={q}")
    reps: dict[str, Mat] = {}
    for cl in conjugacy_data(params):
        if cl.kind == "identity":
            m: Mat = (1, 0, 0, 1)
        elif cl.kind == "unipotent":
            m = (1, 1, 0, 1)
        elif cl.kind == "unipotent_prime":
            m = (1, field.nonsquare(), 0, 1)
        elif cl.kind in ("split", "split_half"):
            s = field.pow(sigma, cl.param)
            m = (s, 0, 0, field.inv(s))
        else:
            # eigenvalues tau0^b and tau0^(-b) live only in F_{q^2}; their
            # sum is the F_q trace, realized by a determinant-1 companion
            t = ext.base_part(ext.add(ext.pow(tau0, cl.param),
                                      ext.pow(tau0, (q + 1) - cl.param)))
            m = (0, 1, field.neg(1), t)
        reps[cl.name] = _canon(field, m)
    return reps


def run_oracle(q: int, table: CharacterTable | None = None,
               cap: int = DEFAULT_CAP) -> OracleReport:
    """Enumerate, partition, match, and (if a table is given) check second
    orthogonality against the explicit class sizes."""
    if q > cap:
        raise CapExceeded(q, cap)
    params = group_params(q)
    field = Field(q)
    ext = Ext(field)
    group = enumerate_group(field)
    expected_size = params.order
    if len(group) != expected_size:
        raise MatchFailure(
            f"explicit PSL(2,{q}) has {len(group)} elements, expected {expected_size}")
    class_of, classes = conjugacy_partition(field, group)
    parametric = conjugacy_data(params)
    if len(classes) != len(parametric):
        raise MatchFailure(
            f"explicit class count {len(classes)} != parametric {len(parametric)} at q={q}")
    if sorted(c.size for c in classes) != sorted(c.size for c in parametric):
        raise MatchFailure(f"class size multisets disagree at q={q}")

    reps = _parametric_reps(params, field, ext)
    matched: list[MatchedClass] = []
    seen_ids: set[int] = set()
    for cl in parametric:
        rep = reps[cl.name]
        cid = class_of.get(rep)
        if cid is None:
            raise MatchFailure(f"constructed representative of {cl.name} "
                               f"is not in the group at q={q}")
        if classes[cid].size != cl.size:
            raise MatchFailure(
                f"class {cl.name} at q={q}: explicit size {classes[cid].size}, "
                f"parametric {cl.size}")
        if cid in seen_ids:
            raise MatchFailure(f"two parametric classes map to one explicit "
                               f"class at q={q} ({cl.name})")
        seen_ids.add(cid)
        matched.append(MatchedClass(cl.name, cl.size, psl_order(field, rep)))

    for mc in matched:
        if mc.name == "I" and mc.element_order != 1:
            raise MatchFailure("identity class has nonidentity representative")
        if mc.name in ("N", "N'") and mc.element_order != params.p:
            raise MatchFailure(f"unipotent class {mc.name} has order "
                               f"{mc.element_order}, expected {params.p}")

    ortho = None
    if table is not None:
        ortho = tuple(second_orthogonality(table, matched))
    return OracleReport(q, len(group), field.modulus, tuple(matched), ortho)


def second_orthogonality(table: CharacterTable,
                         matched: list[MatchedClass]) -> list[tuple[str, int]]:
    """Exact sum over chi of |chi(g)|^2 per class, checked against |G|/|C|
    with the explicit class size; returns (class name, centralizer order)."""
    out = []
    order = table.params.order
    for mc in matched:
        idx = table.class_index(mc.name)
        total = 0
        for ch in table.characters:
            v = ch.values[idx]
            total = total + (v * v.conjugate())
        got = total.as_integer()
        want = order // mc.size
        if got != want:
            raise MatchFailure(
                f"second orthogonality fails at class {mc.name}, q={table.params.q}: "
                f"sum {got}, centralizer {want}")
        out.append((mc.name, want))
    return out
