"""Certificate-producing deciders for "does the form represent t".

Verdicts are YES with an exact witness, NO with a certificate that
verify_certificate can replay without any unbounded search, or UNDECIDED
with the bounds that were exhausted. NO is never "search gave up".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .ntheory import divides, divisors, is_square, prime_power_split, sqrt_exact, squarefree_split

__all__ = [
    "UnaryForm",
    "BinaryForm",
    "DiagonalTernaryForm",
    "Certificate",
    "RepresentationVerdict",
    "SearchLimits",
    "DEFAULT_SIEVE_MODULI",
    "DEFAULT_SEARCH_BOUND",
    "DIVISIBILITY",
    "SIEVE",
    "LEGENDRE",
    "SQUARE_DISC_EXHAUST",
    "NONSQUARE_DISC",
    "DEFINITE",
    "DEFINITE_EXHAUST",
    "CYCLE",
    "unary_represents",
    "binary_represents_zero",
    "binary_represents",
    "ternary_represents_zero",
    "ternary_represents",
    "enumerate_primitive_zeros",
    "verify_certificate",
    "form_from_json",
    "form_to_json",
    "verdict_to_json",
]

DIVISIBILITY = "DIVISIBILITY"
SIEVE = "SIEVE"
LEGENDRE = "LEGENDRE"
SQUARE_DISC_EXHAUST = "SQUARE_DISC_EXHAUST"
NONSQUARE_DISC = "NONSQUARE_DISC"
DEFINITE = "DEFINITE"
DEFINITE_EXHAUST = "DEFINITE_EXHAUST"
CYCLE = "CYCLE"

DEFAULT_SIEVE_MODULI = (3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 64)
DEFAULT_SEARCH_BOUND = 10_000


@dataclass(frozen=True)
class UnaryForm:
    """q(x) = d * x**2."""

    d: int

    def coefficients(self) -> tuple[int, ...]:
        return (self.d,)

    def evaluate(self, v) -> int:
        (x,) = v
        return self.d * x * x


@dataclass(frozen=True)
class BinaryForm:
    """q(x, y) = a x**2 + b x y + c y**2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def coefficients(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c)

    def evaluate(self, v) -> int:
        x, y = v
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class DiagonalTernaryForm:
    """q(x, y, z) = d1 x**2 + d2 y**2 + d3 z**2."""

    d1: int
    d2: int
    d3: int

    def coefficients(self) -> tuple[int, ...]:
        return (self.d1, self.d2, self.d3)

    def evaluate(self, v) -> int:
        x, y, z = v
        return self.d1 * x * x + self.d2 * y * y + self.d3 * z * z


@dataclass(frozen=True)
class SearchLimits:
    """Bounds shared by the sieve ladder and the witness searches."""

    sieve_moduli: tuple[int, ...] = DEFAULT_SIEVE_MODULI
    search_bound: int = DEFAULT_SEARCH_BOUND

    def __post_init__(self):
        if self.search_bound < 1:
            raise ValueError("search bound must be positive")
        if any(m < 2 for m in self.sieve_moduli):
            raise ValueError("sieve moduli must be at least 2")


@dataclass(frozen=True)
class Certificate:
    """A replayable non-representability proof; kind picks the argument."""

    kind: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "data": dict(self.data)}

    @staticmethod
    def from_json(obj) -> "Certificate":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValueError("certificate JSON needs a kind")
        return Certificate(str(obj["kind"]), dict(obj.get("data", {})))


@dataclass(frozen=True)
class RepresentationVerdict:
    kind: str  # YES | NO | UNDECIDED
    witness: tuple[int, ...] | None = None
    certificate: Certificate | None = None
    bounds: dict | None = None

    @staticmethod
    def yes(witness) -> "RepresentationVerdict":
        return RepresentationVerdict("YES", witness=tuple(int(x) for x in witness))

    @staticmethod
    def no(certificate: Certificate) -> "RepresentationVerdict":
        return RepresentationVerdict("NO", certificate=certificate)

    @staticmethod
    def undecided(bounds: dict) -> "RepresentationVerdict":
        return RepresentationVerdict("UNDECIDED", bounds=dict(bounds))


def verdict_to_json(v: RepresentationVerdict) -> dict:
    out: dict = {"kind": v.kind}
    if v.witness is not None:
        out["witness"] = list(v.witness)
    if v.certificate is not None:
        out["certificate"] = v.certificate.to_json()
    if v.bounds is not None:
        out["bounds"] = dict(v.bounds)
    return out


def _coefficient_list(obj, key: str, count: int) -> list[int]:
    value = obj[key]
    if not isinstance(value, (list, tuple)) or len(value) != count:
        raise ValueError(f'form JSON "{key}" needs exactly {count} integers')
    return [int(x) for x in value]


def form_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("form JSON must be an object")
    if "binary" in obj:
        return BinaryForm(*_coefficient_list(obj, "binary", 3))
    if "diag" in obj:
        return DiagonalTernaryForm(*_coefficient_list(obj, "diag", 3))
    if "unary" in obj:
        return UnaryForm(*_coefficient_list(obj, "unary", 1))
    raise ValueError('form JSON needs one of "binary", "diag", "unary"')


def form_to_json(q) -> dict:
    if isinstance(q, BinaryForm):
        return {"binary": [q.a, q.b, q.c]}
    if isinstance(q, DiagonalTernaryForm):
        return {"diag": [q.d1, q.d2, q.d3]}
    if isinstance(q, UnaryForm):
        return {"unary": [q.d]}
    raise ValueError("unknown form type")


def _canonical_sign(vec):
    for x in vec:
        if x > 0:
            return tuple(vec)
        if x < 0:
            return tuple(-y for y in vec)
    return tuple(vec)


def _checked_yes(q, t, witness) -> RepresentationVerdict:
    w = tuple(int(x) for x in witness)
    if q.evaluate(w) != t or (t == 0 and not any(w)):
        raise AssertionError("internal error: invalid witness")
    return RepresentationVerdict.yes(w)


# ---------------------------------------------------------------- unary


def unary_represents(q: UnaryForm, t: int) -> RepresentationVerdict:
    """Decide d x**2 = t; always decides."""
    d = q.d
    if t == 0:
        if d == 0:
            return _checked_yes(q, 0, (1,))
        return RepresentationVerdict.no(Certificate(DEFINITE, {"note": "only the trivial zero"}))
    if not divides(d, t):
        return RepresentationVerdict.no(Certificate(DIVISIBILITY, {"divisor": d}))
    quot = t // d
    if quot < 0:
        return RepresentationVerdict.no(Certificate(DEFINITE, {"sign": 1 if d > 0 else -1}))
    r = sqrt_exact(quot)
    if r is not None:
        return _checked_yes(q, t, (r,))
    return RepresentationVerdict.no(
        Certificate(DEFINITE_EXHAUST, {"bound": isqrt(abs(t) // abs(d))})
    )


# ---------------------------------------------------------------- binary


def binary_represents_zero(q: BinaryForm) -> RepresentationVerdict:
    """Nontrivial zero of a binary form: exists iff the discriminant is a
    nonnegative perfect square."""
    if q.a == 0 and q.b == 0 and q.c == 0:
        raise ValueError("the zero form is excluded")
    d = q.disc
    if not is_square(d):
        return RepresentationVerdict.no(Certificate(NONSQUARE_DISC, {"disc": d}))
    if q.a == 0:
        return _checked_yes(q, 0, (1, 0))
    s = isqrt(d)
    x0, y0 = s - q.b, 2 * q.a
    g = gcd(x0, y0)
    return _checked_yes(q, 0, _canonical_sign((x0 // g, y0 // g)))


def _is_reduced(a: int, b: int, c: int, s: int) -> bool:
    # integer translation of 0 < b < sqrt(D) < b + 2|a| and 2|a| - b < sqrt(D)
    return 1 <= b <= s and 2 * abs(a) + b > s and 2 * abs(a) - b <= s


def _rho_step(form, disc: int, s: int):
    """One reduction step; returns the successor form and the column move m,
    with transform matrix [[0, -1], [1, m]]."""
    a, b, c = form
    ac = abs(c)
    hi = s if ac <= s else ac
    r = hi - ((hi + b) % (2 * ac))
    m = (r + b) // (2 * c)
    nxt = (c, r, (r * r - disc) // (4 * c))
    return nxt, m


_T_STEP_LIMIT = 100_000


def _mat2_mul(p, q):
    return (
        (p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]),
        (p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]),
    )


def _cycle_of(form, disc: int):
    """Reduced cycle of the proper class of form, with transforms from form.

    Returns (cycle, transforms, entry_transform): cycle[i] results from form
    by the unimodular transforms[i].
    """
    s = isqrt(disc)
    t = ((1, 0), (0, 1))
    f = form
    for _ in range(_T_STEP_LIMIT):
        if _is_reduced(*f, s):
            break
        f, m = _rho_step(f, disc, s)
        t = _mat2_mul(t, ((0, -1), (1, m)))
    else:
        raise RuntimeError("reduction did not terminate")
    first = f
    cycle = [f]
    transforms = [t]
    for _ in range(_T_STEP_LIMIT):
        f, m = _rho_step(f, disc, s)
        t = _mat2_mul(t, ((0, -1), (1, m)))
        if f == first:
            break
        cycle.append(f)
        transforms.append(t)
    else:
        raise RuntimeError("cycle did not close")
    return cycle, transforms, transforms[0]


def _cycle_decide(q1: BinaryForm, t1: int, g: int):
    """Decide representation of t1 under 4 t1**2 < disc (nonsquare).

    A value u with 4 u**2 < disc is primitively represented exactly when u
    is a leading coefficient on the reduced cycle.
    """
    disc = q1.disc
    cycle, transforms, entry = _cycle_of((q1.a, q1.b, q1.c), disc)
    leading = {}
    for i, f in enumerate(cycle):
        leading.setdefault(f[0], i)
    f = 1
    while f * f <= abs(t1):
        if t1 % (f * f) == 0:
            u = t1 // (f * f)
            if u in leading:
                t = transforms[leading[u]]
                return (f * t[0][0], f * t[1][0]), None
        f += 1
    cert = Certificate(
        CYCLE,
        {
            "content": g,
            "disc": disc,
            "transform": [list(entry[0]), list(entry[1])],
            "cycle": [list(x) for x in cycle],
        },
    )
    return None, cert


def _definite_bounds(a: int, c: int, t: int, disc: int) -> tuple[int, int]:
    # from 4a q = (2ax + by)**2 + |D| y**2: solutions fit in this box
    bx = isqrt(4 * abs(c * t) // abs(disc))
    by = isqrt(4 * abs(a * t) // abs(disc))
    return bx, by


def _solve_quadratic(a: int, b: int, c: int):
    """Integer roots of a u**2 + b u + c = 0 (a != 0)."""
    d = b * b - 4 * a * c
    r = sqrt_exact(d)
    if r is None:
        return []
    roots = []
    for s in (r, -r) if r else (r,):
        num = -b + s
        if num % (2 * a) == 0:
            roots.append(num // (2 * a))
    return roots


def _square_disc_search(q1: BinaryForm, t1: int):
    """Solve a form with square discriminant by factoring into linear forms
    and walking the divisor systems of the target."""
    s = isqrt(q1.disc)
    if q1.a != 0:
        k = 4 * q1.a
        l1 = (2 * q1.a, q1.b - s)
        l2 = (2 * q1.a, q1.b + s)
    else:
        k = 1
        l1 = (0, 1)
        l2 = (q1.b, q1.c)
    target = k * t1
    det = l1[0] * l2[1] - l1[1] * l2[0]
    pairs = 0
    for d in divisors(target):
        for u in (d, -d):
            v, rem = divmod(target, u)
            if rem:
                continue
            pairs += 1
            xn = u * l2[1] - v * l1[1]
            yn = v * l1[0] - u * l2[0]
            if xn % det == 0 and yn % det == 0:
                w = (xn // det, yn // det)
                if q1.evaluate(w) == t1:
                    return w, pairs
    return None, pairs


def _binary_sieve(q: BinaryForm, t: int, moduli) -> int | None:
    for m in moduli:
        hit = False
        tm = t % m
        for x in range(m):
            for y in range(m):
                if (q.a * x * x + q.b * x * y + q.c * y * y) % m == tm:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            return m
    return None


def _binary_bounded_search(q1: BinaryForm, t1: int, bound: int):
    # only reached with positive nonsquare discriminant, so a, c != 0;
    # solutions with a negative scanned coordinate are sign-flips of these
    a, b, c = q1.a, q1.b, q1.c
    for x in range(bound + 1):
        for y in _solve_quadratic(c, b * x, a * x * x - t1):
            return (x, y)
    for y in range(bound + 1):
        for x in _solve_quadratic(a, b * y, c * y * y - t1):
            return (x, y)
    return None


def binary_represents(q: BinaryForm, t: int, limits: SearchLimits | None = None) -> RepresentationVerdict:
    """Decide q = t for nondegenerate binary q (t = 0 is routed to the
    discriminant test)."""
    if t == 0:
        return binary_represents_zero(q)
    if q.disc == 0:
        raise ValueError("degenerate form")
    limits = limits or SearchLimits()
    g = gcd(gcd(q.a, q.b), q.c)
    if t % g != 0:
        return RepresentationVerdict.no(Certificate(DIVISIBILITY, {"divisor": g}))
    a1, b1, c1, t1 = q.a // g, q.b // g, q.c // g, t // g
    q1 = BinaryForm(a1, b1, c1)
    d1 = q1.disc
    if d1 < 0:
        sign = 1 if a1 > 0 else -1
        if t1 * sign < 0:
            return RepresentationVerdict.no(Certificate(DEFINITE, {"sign": sign}))
        bx, by = _definite_bounds(a1, c1, t1, d1)
        for y in range(by + 1):
            for x in _solve_quadratic(a1, b1 * y, c1 * y * y - t1):
                return _checked_yes(q, t, (x, y))
        return RepresentationVerdict.no(
            Certificate(DEFINITE_EXHAUST, {"content": g, "bound_x": bx, "bound_y": by})
        )
    if is_square(d1):
        w, pairs = _square_disc_search(q1, t1)
        if w is not None:
            return _checked_yes(q, t, w)
        return RepresentationVerdict.no(
            Certificate(SQUARE_DISC_EXHAUST, {"content": g, "pairs_tried": pairs})
        )
    if 4 * t1 * t1 < d1:
        w, cert = _cycle_decide(q1, t1, g)
        if w is not None:
            return _checked_yes(q, t, w)
        return RepresentationVerdict.no(cert)
    m = _binary_sieve(q, t, limits.sieve_moduli)
    if m is not None:
        return RepresentationVerdict.no(Certificate(SIEVE, {"modulus": m}))
    w = _binary_bounded_search(q1, t1, limits.search_bound)
    if w is not None:
        return _checked_yes(q, t, w)
    return RepresentationVerdict.undecided(
        {"search_bound": limits.search_bound, "sieve_moduli": list(limits.sieve_moduli)}
    )


# ---------------------------------------------------------------- ternary


def _require_nonzero_diag(q: DiagonalTernaryForm):
    if q.d1 == 0 or q.d2 == 0 or q.d3 == 0:
        raise ValueError("diagonal coefficients must be nonzero")


def _legendre_reduce(q: DiagonalTernaryForm):
    """Normalize to squarefree pairwise-coprime coefficients.

    Every step is logged so zero witnesses can be mapped back: content
    division keeps zeros unchanged; removing a square factor f**2 from one
    coefficient multiplies the other two witness coordinates by f; merging a
    prime shared by two coefficients multiplies the third coordinate by it.
    """
    d = list(q.coefficients())
    steps = []
    g = gcd(gcd(d[0], d[1]), d[2])
    if g > 1:
        d = [x // g for x in d]
        steps.append({"op": "content", "g": g})
    for i in range(3):
        s, f = squarefree_split(d[i])
        if f > 1:
            d[i] = s
            steps.append({"op": "square", "axis": i, "factor": f})
    while True:
        for i, j in ((0, 1), (0, 2), (1, 2)):
            shared = gcd(d[i], d[j])
            if shared > 1:
                p = min(pp for pp in _prime_factors(shared))
                k = 3 - i - j
                d[i] //= p
                d[j] //= p
                d[k] *= p
                steps.append({"op": "merge", "axes": [i, j], "prime": p})
                break
        else:
            break
    return tuple(d), steps


def _prime_factors(n: int):
    from .ntheory import factorize

    return sorted(factorize(n))


def _legendre_conditions(a: int, b: int, c: int):
    return (
        (abs(a), (-b * c) % abs(a)),
        (abs(b), (-a * c) % abs(b)),
        (abs(c), (-a * b) % abs(c)),
    )


def _is_qr(v: int, m: int) -> bool:
    if m == 1:
        return True
    v %= m
    return any((x * x) % m == v for x in range(m))


def _backmap_zero(w, steps):
    w = list(w)
    for step in reversed(steps):
        if step["op"] == "square":
            f = step["factor"]
            for k in range(3):
                if k != step["axis"]:
                    w[k] *= f
        elif step["op"] == "merge":
            k = 3 - step["axes"][0] - step["axes"][1]
            w[k] *= step["prime"]
        # content: zero sets coincide
    return w


def _holzer_scan(a: int, b: int, c: int):
    """Witness of a x**2 + b y**2 + c z**2 = 0 inside the Holzer box; the box
    is guaranteed nonempty once the residue conditions hold."""
    bound_x = isqrt(abs(b * c))
    bound_y = isqrt(abs(a * c))
    box = max(bound_x, bound_y)
    while True:
        for x in range(min(bound_x, box) + 1):
            ax2 = a * x * x
            for y in range(min(bound_y, box) + 1):
                num = -(ax2 + b * y * y)
                if num % c:
                    continue
                z2 = num // c
                if z2 < 0:
                    continue
                z = sqrt_exact(z2)
                if z is not None and (x or y or z):
                    return (x, y, z)
        bound_x *= 2
        bound_y *= 2
        box *= 2
        if box > 10**9:
            raise RuntimeError("isotropy witness scan exceeded its safety bound")


def ternary_represents_zero(q: DiagonalTernaryForm) -> RepresentationVerdict:
    """Complete decision of nontrivial isotropy for diagonal ternary forms:
    squarefree pairwise-coprime reduction, then the residue criterion, with a
    bounded witness scan on the solvable side."""
    _require_nonzero_diag(q)
    signs = {1 if d > 0 else -1 for d in q.coefficients()}
    if len(signs) == 1:
        return RepresentationVerdict.no(Certificate(DEFINITE, {"sign": signs.pop()}))
    (a, b, c), steps = _legendre_reduce(q)
    conds = _legendre_conditions(a, b, c)
    for idx, (m, v) in enumerate(conds):
        if not _is_qr(v, m):
            return RepresentationVerdict.no(
                Certificate(
                    LEGENDRE,
                    {"reduced": [a, b, c], "steps": steps, "condition": idx, "modulus": m, "target": v},
                )
            )
    w = _holzer_scan(a, b, c)
    w = _backmap_zero(w, steps)
    g = gcd(gcd(w[0], w[1]), w[2])
    w = [x // g for x in w]
    return _checked_yes(q, 0, _canonical_sign(w))


def _ternary_residues(q: DiagonalTernaryForm, m: int):
    s1 = {q.d1 * x * x % m for x in range(m)}
    s2 = {q.d2 * x * x % m for x in range(m)}
    s3 = {q.d3 * x * x % m for x in range(m)}
    s12 = {(u + v) % m for u in s1 for v in s2}
    return {(u + v) % m for u in s12 for v in s3}


def _ternary_sieve(q: DiagonalTernaryForm, t: int, moduli) -> int | None:
    for m in moduli:
        if t % m not in _ternary_residues(q, m):
            return m
    return None


def ternary_represents(q: DiagonalTernaryForm, t: int, limits: SearchLimits | None = None) -> RepresentationVerdict:
    """Decide q = t for diagonal ternary q (t = 0 is routed to the isotropy
    decider). Indefinite forms use a sieve ladder then a separable search."""
    _require_nonzero_diag(q)
    if t == 0:
        return ternary_represents_zero(q)
    limits = limits or SearchLimits()
    d = q.coefficients()
    g = gcd(gcd(d[0], d[1]), d[2])
    if t % g != 0:
        return RepresentationVerdict.no(Certificate(DIVISIBILITY, {"divisor": g}))
    signs = {1 if x > 0 else -1 for x in d}
    if len(signs) == 1:
        sign = signs.pop()
        if t * sign < 0:
            return RepresentationVerdict.no(Certificate(DEFINITE, {"sign": sign}))
        bounds = [isqrt(abs(t) // abs(x)) for x in d]
        for x in range(bounds[0] + 1):
            for y in range(bounds[1] + 1):
                rem = t - d[0] * x * x - d[1] * y * y
                if rem % d[2]:
                    continue
                z2 = rem // d[2]
                if z2 < 0:
                    continue
                z = sqrt_exact(z2)
                if z is not None:
                    return _checked_yes(q, t, (x, y, z))
        return RepresentationVerdict.no(
            Certificate(DEFINITE_EXHAUST, {"bounds": bounds})
        )
    m = _ternary_sieve(q, t, limits.sieve_moduli)
    if m is not None:
        return RepresentationVerdict.no(Certificate(SIEVE, {"modulus": m}))
    # separable search: negate if needed so exactly one coefficient is
    # positive; witnesses transfer unchanged
    dd, tt = list(d), t
    if sum(1 for x in dd if x > 0) == 2:
        dd = [-x for x in dd]
        tt = -t
    p_axis = next(i for i in range(3) if dd[i] > 0)
    n1, n2 = [i for i in range(3) if i != p_axis]
    for x in range(limits.search_bound + 1):
        rhs = dd[p_axis] * x * x - tt
        if rhs < 0:
            continue
        ylim = isqrt(rhs // abs(dd[n1]))
        for y in range(ylim + 1):
            rem = rhs - abs(dd[n1]) * y * y
            if rem % abs(dd[n2]):
                continue
            z = sqrt_exact(rem // abs(dd[n2]))
            if z is not None:
                w = [0, 0, 0]
                w[p_axis], w[n1], w[n2] = x, y, z
                return _checked_yes(q, t, w)
    return RepresentationVerdict.undecided(
        {"search_bound": limits.search_bound, "sieve_moduli": list(limits.sieve_moduli)}
    )


def enumerate_primitive_zeros(q: DiagonalTernaryForm, height: int) -> list[tuple[int, int, int]]:
    """All primitive zeros with max-abs coordinate <= height, one per sign
    pair, sorted lexicographically."""
    _require_nonzero_diag(q)
    if height < 0:
        raise ValueError("height must be nonnegative")
    found: set[tuple[int, int, int]] = set()
    for x in range(-height, height + 1):
        for y in range(-height, height + 1):
            num = -(q.d1 * x * x + q.d2 * y * y)
            if num % q.d3:
                continue
            z2 = num // q.d3
            if z2 < 0:
                continue
            z = sqrt_exact(z2)
            if z is None or z > height:
                continue
            for zz in {z, -z}:
                v = (x, y, zz)
                if not any(v):
                    continue
                if gcd(gcd(x, y), zz) != 1:
                    continue
                found.add(_canonical_sign(v))
    return sorted(found)


# ---------------------------------------------------------------- verifier

_VERIFY_BOX_LIMIT = 4_000_000
_VERIFY_SIEVE_LIMIT = 512
_VERIFY_CYCLE_LIMIT = 100_000


def _verify_divisibility(q, t, data) -> bool:
    d = data["divisor"]
    if not isinstance(d, int):
        return False
    return all(divides(d, c) for c in q.coefficients()) and not divides(d, t)


def _verify_sieve(q, t, data) -> bool:
    m = data["modulus"]
    if not isinstance(m, int) or not 2 <= m <= _VERIFY_SIEVE_LIMIT:
        return False
    if t == 0:
        # primitive-tuple sieve needs a prime-power modulus
        p = data.get("prime")
        split = prime_power_split(m)
        if split is None or not isinstance(p, int) or split[0] != p:
            return False
        rng = range(m)
        if isinstance(q, BinaryForm):
            tuples = ((x, y) for x in rng for y in rng)
        elif isinstance(q, DiagonalTernaryForm):
            tuples = ((x, y, z) for x in rng for y in rng for z in rng)
        else:
            return False
        for v in tuples:
            if all(c % p == 0 for c in v):
                continue
            if q.evaluate(v) % m == 0:
                return False
        return True
    if isinstance(q, BinaryForm):
        tm = t % m
        return all(
            (q.a * x * x + q.b * x * y + q.c * y * y) % m != tm
            for x in range(m)
            for y in range(m)
        )
    if isinstance(q, DiagonalTernaryForm):
        return t % m not in _ternary_residues(q, m)
    return False


def _verify_nonsquare_disc(q, t, data) -> bool:
    if not isinstance(q, BinaryForm) or t != 0:
        return False
    if q.a == 0 and q.b == 0 and q.c == 0:
        return False
    return not is_square(q.disc)


def _verify_definite(q, t, data) -> bool:
    if isinstance(q, UnaryForm):
        if q.d == 0:
            return False
        return t == 0 or q.d * t < 0
    if isinstance(q, BinaryForm):
        if q.disc >= 0:
            return False
        return t == 0 or q.a * t < 0
    if isinstance(q, DiagonalTernaryForm):
        signs = {1 if x > 0 else -1 for x in q.coefficients() if x != 0}
        if 0 in q.coefficients() or len(signs) != 1:
            return False
        return t == 0 or t * signs.pop() < 0
    return False


def _verify_definite_exhaust(q, t, data) -> bool:
    if t == 0:
        return False
    if isinstance(q, UnaryForm):
        if q.d == 0:
            return False
        bound = isqrt(abs(t) // abs(q.d))
        return all(q.evaluate((x,)) != t for x in range(-bound, bound + 1))
    if isinstance(q, BinaryForm):
        if q.disc >= 0:
            return False
        bx, by = _definite_bounds(q.a, q.c, t, q.disc)
        if (2 * bx + 1) * (2 * by + 1) > _VERIFY_BOX_LIMIT:
            return False
        return all(
            q.evaluate((x, y)) != t
            for x in range(-bx, bx + 1)
            for y in range(-by, by + 1)
        )
    if isinstance(q, DiagonalTernaryForm):
        d = q.coefficients()
        signs = {1 if x > 0 else -1 for x in d if x != 0}
        if 0 in d or len(signs) != 1:
            return False
        bounds = [isqrt(abs(t) // abs(x)) for x in d]
        cells = 1
        for b in bounds:
            cells *= 2 * b + 1
        if cells > _VERIFY_BOX_LIMIT:
            return False
        return all(
            q.evaluate((x, y, z)) != t
            for x in range(-bounds[0], bounds[0] + 1)
            for y in range(-bounds[1], bounds[1] + 1)
            for z in range(-bounds[2], bounds[2] + 1)
        )
    return False


def _verify_square_disc(q, t, data) -> bool:
    if not isinstance(q, BinaryForm) or t == 0:
        return False
    g = data.get("content", 1)
    if not isinstance(g, int) or g < 1:
        return False
    if any(c % g for c in q.coefficients()) or t % g:
        return False
    q1 = BinaryForm(q.a // g, q.b // g, q.c // g)
    t1 = t // g
    if q1.disc <= 0 or not is_square(q1.disc):
        return False
    w, _ = _square_disc_search(q1, t1)
    return w is None


def _verify_legendre(q, t, data) -> bool:
    if not isinstance(q, DiagonalTernaryForm) or t != 0:
        return False
    if 0 in q.coefficients():
        return False
    reduced, _ = _legendre_reduce(q)
    if list(data.get("reduced", [])) != list(reduced):
        return False
    idx = data.get("condition")
    if idx not in (0, 1, 2):
        return False
    m, v = _legendre_conditions(*reduced)[idx]
    return not _is_qr(v, m)


def _verify_cycle(q, t, data) -> bool:
    if not isinstance(q, BinaryForm) or t == 0:
        return False
    g = data.get("content", 1)
    if not isinstance(g, int) or g < 1:
        return False
    if any(c % g for c in q.coefficients()) or t % g:
        return False
    a1, b1, c1 = q.a // g, q.b // g, q.c // g
    t1 = t // g
    disc = b1 * b1 - 4 * a1 * c1
    if disc <= 0 or is_square(disc) or 4 * t1 * t1 >= disc:
        return False
    cycle = data.get("cycle")
    tr = data.get("transform")
    if not isinstance(cycle, list) or not cycle or len(cycle) > _VERIFY_CYCLE_LIMIT:
        return False
    try:
        cycle = [(int(x), int(y), int(z)) for x, y, z in cycle]
        ((t00, t01), (t10, t11)) = ((int(tr[0][0]), int(tr[0][1])), (int(tr[1][0]), int(tr[1][1])))
    except (TypeError, ValueError):
        return False
    if abs(t00 * t11 - t01 * t10) != 1:
        return False
    # the transform must carry the form onto the cycle entry
    f0 = cycle[0]
    m2 = ((2 * a1, b1), (b1, 2 * c1))
    tt = ((t00, t10), (t01, t11))  # transpose
    prod = _mat2_mul(_mat2_mul(tt, m2), ((t00, t01), (t10, t11)))
    if prod != ((2 * f0[0], f0[1]), (f0[1], 2 * f0[2])):
        return False
    s = isqrt(disc)
    for fa, fb, fc in cycle:
        if fb * fb - 4 * fa * fc != disc or not _is_reduced(fa, fb, fc, s):
            return False
    for i, f in enumerate(cycle):
        nxt, _ = _rho_step(f, disc, s)
        if nxt != cycle[(i + 1) % len(cycle)]:
            return False
    leading = {f[0] for f in cycle}
    f = 1
    while f * f <= abs(t1):
        if t1 % (f * f) == 0 and t1 // (f * f) in leading:
            return False
        f += 1
    return True


_VERIFIERS = {
    DIVISIBILITY: _verify_divisibility,
    SIEVE: _verify_sieve,
    NONSQUARE_DISC: _verify_nonsquare_disc,
    DEFINITE: _verify_definite,
    DEFINITE_EXHAUST: _verify_definite_exhaust,
    SQUARE_DISC_EXHAUST: _verify_square_disc,
    LEGENDRE: _verify_legendre,
    CYCLE: _verify_cycle,
}


def verify_certificate(q, t, cert) -> bool:
    """Replay a non-representability certificate; False on anything malformed,
    never an exception."""
    try:
        if isinstance(cert, dict):
            cert = Certificate.from_json(cert)
        if not isinstance(cert, Certificate):
            return False
        checker = _VERIFIERS.get(cert.kind)
        if checker is None:
            return False
        if not isinstance(cert.data, dict):
            return False
        if not isinstance(t, int):
            return False
        return bool(checker(q, t, cert.data))
    except Exception:
        return False
