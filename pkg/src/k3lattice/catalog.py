"""Certified catalog of the explicit constructions: the rank-2 double-NO
search inside the full K3 lattice (claim3_search), five certified family
lattices with their expected verdict tables, and a rank-2 double-NO
sublattice of U + A1(-1) (theorem3_example).

Computed verdicts are PROVEN (witness or replayable certificate).
Literature facts are echoed as PAPER_ASSERTED entries with citations to the
external sources (Nikulin, Kondo, Shioda) and are never recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, product
from math import gcd

from . import elliptic, lattices, matrices, qform
from .embeddings import EmbeddedSublattice, induced_gram, is_primitive, primitive_closure
from .k3 import (
    INFINITE,
    FINITE,
    PAPER_ASSERTED,
    PROVEN,
    AutReport,
    K3Report,
    PicardData,
    classify,
    report_to_json,
    revalidate_report,
)
from .lattices import GramLattice, direct_sum, discriminant_group, standard_lattice
from .ntheory import is_square
from .qform import (
    BinaryForm,
    RepresentationVerdict,
    SearchLimits,
    verdict_to_json,
    verify_certificate,
)

__all__ = [
    "Claim3Input",
    "Claim3Result",
    "FamilySpec",
    "Theorem3Example",
    "SearchExhausted",
    "CatalogMismatch",
    "claim3_search",
    "family",
    "certify_family",
    "theorem3_example",
    "paper_verification",
    "claim3_result_to_json",
    "theorem3_to_json",
]

# Index layout of the fixed K3-lattice basis: three hyperbolic planes, then
# two copies of the negated E8 root lattice.
_U_PAIRS = ((0, 1), (2, 3), (4, 5))
_E8_BLOCKS = (6, 14)


class SearchExhausted(Exception):
    """A certified search ran out of candidates within its bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class CatalogMismatch(Exception):
    """A catalog entry failed one of its hard expectations."""


@dataclass(frozen=True)
class Claim3Input:
    """Pairing data of a polarization l and a second class a:
    (l,l) = 2A > 0, (l,a) = B, (a,a) = 2C."""

    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A < 1:
            raise ValueError("A must be at least 1: 2A is the square of a polarization")


@dataclass(frozen=True)
class Claim3Result:
    inputs: Claim3Input
    N: int
    M: int
    n: int
    m: int
    vector_l: tuple[int, ...]
    vector_generator: tuple[int, ...]  # n*a + h
    gram: tuple[tuple[int, ...], ...]
    zero_verdict: RepresentationVerdict
    minus2_verdict: RepresentationVerdict
    invariant_factors: tuple[int, ...]


def _k3_vector(entries: dict[int, int]) -> tuple[int, ...]:
    v = [0] * 22
    for idx, val in entries.items():
        v[idx] = val
    return tuple(v)


def claim3_search(inputs: Claim3Input, bound: int = 50) -> Claim3Result:
    """Walk (N, M) pairs in the diagonal order (N+M ascending, then N
    ascending) and return the first hyperbolic, primitive, certified
    double-NO plane spanned by l and n*a + h inside the K3 lattice.

    The two branches fix the scaling: n = A*N, m = A*M when A >= 2 (making
    the form divisible by 2A), and n = 4N, m = 4M when A = 1 (pinning the
    form to 2x^2 + 8NBxy + 8(4N^2*C - M)y^2, which is 0 or 2 mod 8).
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    ambient = standard_lattice("K3")
    a_, b_, c_ = inputs.A, inputs.B, inputs.C
    vec_l = _k3_vector({0: 1, 1: a_})
    for s in range(2, 2 * bound + 1):
        for big_n in range(max(1, s - bound), min(bound, s - 1) + 1):
            big_m = s - big_n
            if a_ >= 2:
                n, m = a_ * big_n, a_ * big_m
            else:
                n, m = 4 * big_n, 4 * big_m
            # generator = n*a + h with a = B*e12 + e21 + C*e22, h = e31 - m*e32
            gen = _k3_vector({1: n * b_, 2: n, 3: n * c_, 4: 1, 5: -m})
            q = BinaryForm(2 * a_, 2 * n * b_, 2 * (n * n * c_ - m))
            if q.disc <= 0:
                continue  # the plane must be hyperbolic to be a Picard lattice
            zero = qform.binary_represents_zero(q)
            if zero.kind != "NO":
                continue
            minus2 = qform.binary_represents(q, -2)
            if minus2.kind != "NO":
                continue
            sub = EmbeddedSublattice(ambient, [vec_l, gen])
            factors = _invariant_factors(sub)
            if any(f != 1 for f in factors):
                continue
            got = induced_gram(sub).gram
            expected = ((2 * a_, n * b_), (n * b_, 2 * (n * n * c_ - m)))
            if got != expected:
                raise RuntimeError("internal error: induced Gram differs from the closed form")
            return Claim3Result(
                inputs=inputs,
                N=big_n,
                M=big_m,
                n=n,
                m=m,
                vector_l=vec_l,
                vector_generator=gen,
                gram=got,
                zero_verdict=zero,
                minus2_verdict=minus2,
                invariant_factors=factors,
            )
    raise SearchExhausted(f"no certified plane found with N, M <= {bound}", bound)


def _invariant_factors(sub: EmbeddedSublattice) -> tuple[int, ...]:
    return tuple(matrices.smith_normal_form(sub.basis_matrix()).invariant_factors())


def claim3_result_to_json(res: Claim3Result) -> dict:
    return {
        "inputs": {"A": res.inputs.A, "B": res.inputs.B, "C": res.inputs.C},
        "N": res.N,
        "M": res.M,
        "n": res.n,
        "m": res.m,
        "l": list(res.vector_l),
        "generator": list(res.vector_generator),
        "gram": [list(r) for r in res.gram],
        "zero": verdict_to_json(res.zero_verdict),
        "minus2": verdict_to_json(res.minus2_verdict),
        "invariant_factors": list(res.invariant_factors),
    }


# ---------------------------------------------------------------- families


@dataclass(frozen=True)
class FamilySpec:
    family_id: int
    label: str
    n: int | None
    generators: tuple[tuple[int, ...], ...]
    target_gram: tuple[tuple[int, ...], ...]
    expected: dict  # kinds for has_minus2 / has_isotropic, verdict for aut
    aut_overlay: dict | None  # PAPER_ASSERTED replacement when rank rules say UNKNOWN
    assertions: tuple = ()


def _orthogonal_root_indices(count: int) -> tuple[int, ...]:
    """Lexicographically first pairwise-orthogonal simple roots of the E8
    diagram (local indices 0..7)."""
    gram = standard_lattice("E8_neg").gram
    for combo in combinations(range(8), count):
        if all(gram[i][j] == 0 for i, j in combinations(combo, 2)):
            return combo
    raise RuntimeError(f"no {count} pairwise-orthogonal simple roots")


def _root_sum(block: int, locals_: tuple[int, ...]) -> tuple[int, ...]:
    return _k3_vector({block + i: 1 for i in locals_})


def family(family_id: int, n: int | None = None) -> FamilySpec:
    """The five certified constructions inside the fixed K3 basis. Family 1
    takes the parameter n (positive, not divisible by 3); the others ignore n.
    """
    if family_id == 1:
        if n is None:
            n = 1
        if n % 3 == 0:
            raise ValueError("family 1 needs n not divisible by 3")
        if n < 1:
            raise ValueError("family 1 needs a positive n for a hyperbolic lattice")
        return FamilySpec(
            family_id=1,
            label=f"family-1(n={n})",
            n=n,
            generators=(
                _k3_vector({0: 1, 1: 3 * n}),
                _k3_vector({_E8_BLOCKS[0]: 1}),
                _k3_vector({_E8_BLOCKS[1]: 1}),
            ),
            target_gram=((6 * n, 0, 0), (0, -2, 0), (0, 0, -2)),
            expected={"has_minus2": "YES", "has_isotropic": "NO", "aut": INFINITE},
            aut_overlay={
                "verdict": INFINITE,
                "reason": "asserted for sufficiently large n via the finiteness of rank-3 "
                "Picard lattices with finite automorphism group",
                "citation": "Nikulin [Ni4]",
            },
        )
    if family_id == 2:
        pair = _orthogonal_root_indices(2)
        return FamilySpec(
            family_id=2,
            label="family-2",
            n=None,
            generators=(
                _k3_vector({0: 1, 1: 2}),
                _root_sum(_E8_BLOCKS[0], pair),
                _root_sum(_E8_BLOCKS[1], pair),
            ),
            target_gram=((4, 0, 0), (0, -4, 0), (0, 0, -4)),
            expected={"has_minus2": "NO", "has_isotropic": "YES", "aut": INFINITE},
            aut_overlay=None,
        )
    if family_id == 3:
        quad = _orthogonal_root_indices(4)
        return FamilySpec(
            family_id=3,
            label="family-3",
            n=None,
            generators=(
                _k3_vector({0: 1}),
                _k3_vector({1: 1}),
                _root_sum(_E8_BLOCKS[0], quad),
            ),
            target_gram=((0, 1, 0), (1, 0, 0), (0, 0, -8)),
            expected={"has_minus2": "YES", "has_isotropic": "YES", "aut": INFINITE},
            aut_overlay={
                "verdict": INFINITE,
                "reason": "asserted via the Mordell-Weil section of height 8: translation "
                "by it is an automorphism of infinite order",
                "citation": "Shioda [Sh]",
            },
        )
    if family_id == 4:
        pair = _orthogonal_root_indices(2)
        return FamilySpec(
            family_id=4,
            label="family-4",
            n=None,
            generators=(
                _k3_vector({0: 1, 1: 6}),
                _root_sum(_E8_BLOCKS[0], pair),
                _root_sum(_E8_BLOCKS[1], pair),
            ),
            target_gram=((12, 0, 0), (0, -4, 0), (0, 0, -4)),
            expected={"has_minus2": "NO", "has_isotropic": "NO", "aut": INFINITE},
            aut_overlay=None,
        )
    if family_id == 5:
        return FamilySpec(
            family_id=5,
            label="family-5",
            n=None,
            generators=(
                _k3_vector({0: 1}),
                _k3_vector({1: 1}),
                _k3_vector({2: 1, 3: -1}),
            ),
            target_gram=((0, 1, 0), (1, 0, 0), (0, 0, -2)),
            expected={"has_minus2": "YES", "has_isotropic": "YES", "aut": FINITE},
            aut_overlay={
                "verdict": FINITE,
                "reason": "asserted: deformations with this rank-3 Picard lattice keep a "
                "finite automorphism group",
                "citation": "Nikulin [Ni3]",
            },
            assertions=(
                {
                    "statement": "the rank-19 special member contains exactly 24 smooth rational curves",
                    "status": PAPER_ASSERTED,
                    "citation": "Nikulin [Ni3]; Kondo [Ko1]",
                },
                {
                    "statement": "the rank-19 special member admits finitely many (> 0) elliptic pencils",
                    "status": PAPER_ASSERTED,
                    "citation": "Nikulin [Ni3]; Kondo [Ko1]",
                },
                {
                    "statement": "the automorphism group of the rank-19 special member is S3 x mu2",
                    "status": PAPER_ASSERTED,
                    "citation": "Nikulin [Ni3]; Kondo [Ko1]",
                },
            ),
        )
    raise ValueError("family_id must be 1..5")


def certify_family(spec: FamilySpec, limits: SearchLimits | None = None) -> K3Report:
    """Realize the family inside the K3 lattice, check the Gram contract and
    primitivity, run the predicates, and compare against the expected table.
    Any PROVEN disagreement raises CatalogMismatch naming the family."""
    ambient = standard_lattice("K3")
    sub = EmbeddedSublattice(ambient, spec.generators)
    lattice = induced_gram(sub)
    if lattice.gram != spec.target_gram:
        raise CatalogMismatch(
            f"{spec.label}: induced Gram {lattice.gram} does not match the target {spec.target_gram}"
        )
    if not is_primitive(sub):
        raise CatalogMismatch(f"{spec.label}: generators do not span a primitive sublattice")
    report = classify(PicardData(lattice), limits, label=spec.label)
    for key, want in (("has_minus2", spec.expected["has_minus2"]), ("has_isotropic", spec.expected["has_isotropic"])):
        got = getattr(report, key).kind
        if got != want:
            raise CatalogMismatch(f"{spec.label}: {key} is {got}, expected {want}")
    aut = report.aut
    if aut.status == PROVEN:
        if aut.verdict != spec.expected["aut"]:
            raise CatalogMismatch(
                f"{spec.label}: proven aut verdict {aut.verdict} contradicts expected {spec.expected['aut']}"
            )
    elif spec.aut_overlay is not None:
        aut = AutReport(
            verdict=spec.aut_overlay["verdict"],
            status=PAPER_ASSERTED,
            reason=spec.aut_overlay["reason"],
            minus2=aut.minus2,
            isotropic=aut.isotropic,
            citation=spec.aut_overlay["citation"],
        )
        if aut.verdict != spec.expected["aut"]:
            raise CatalogMismatch(f"{spec.label}: overlay disagrees with the expected table")
    extras = _family_extras(spec, report)
    return replace(report, aut=aut, extras=extras, assertions=spec.assertions)


def _family_extras(spec: FamilySpec, report: K3Report) -> dict:
    extras: dict = {}
    if spec.family_id == 1:
        extras["disc_group_order"] = lattices.discriminant_group(
            GramLattice(3, spec.target_gram)
        ).order
    if spec.family_id == 2:
        q = qform.DiagonalTernaryForm(4, -4, -4)
        extras["primitive_zeros_height_30"] = len(qform.enumerate_primitive_zeros(q, 30))
    if spec.family_id == 3:
        fib = elliptic.FibrationData(rho=3)
        c0_dot_c1 = elliptic.section_intersection_from_height(8)
        pencil = elliptic.pencil_class_from_sections(-2, -2, c0_dot_c1)
        extras.update(
            {
                "mordell_weil_rank": elliptic.mordell_weil_rank(fib),
                "section_height": 8,
                "c0_dot_c1": c0_dot_c1,
                "pencil_square": pencil.square,
                "pencil_is_pencil": pencil.is_pencil,
                "max_singular_fibers": elliptic.max_singular_fibers_bound(),
            }
        )
    return extras


# ---------------------------------------------------------------- theorem-3 example


@dataclass(frozen=True)
class Theorem3Example:
    generators: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]
    zero_verdict: RepresentationVerdict
    minus2_verdict: RepresentationVerdict
    height_bound: int


def _ambient_u_a1() -> GramLattice:
    return direct_sum(standard_lattice("U"), standard_lattice("A1_neg"))


def _small_primitive_vectors(lattice: GramLattice, box: int):
    out = []
    for v in product(range(-box, box + 1), repeat=lattice.rank):
        if not any(v):
            continue
        g = 0
        for x in v:
            g = gcd(g, x)
        if g != 1:
            continue
        if qform._canonical_sign(v) != v:
            continue
        out.append(v)
    out.sort(key=lambda v: (max(abs(x) for x in v), v))
    return out


def theorem3_example(height_bound: int = 10, limits: SearchLimits | None = None) -> Theorem3Example:
    """Search rank-2 primitive hyperbolic sublattices of U + A1(-1) for one
    whose form is certified to represent neither 0 nor -2."""
    ambient = _ambient_u_a1()
    pool = [u for u in _small_primitive_vectors(ambient, 2) if ambient.square(u) not in (0, -2)]
    memo: dict = {}
    for u in pool:
        uu = ambient.square(u)
        for shell in range(1, height_bound + 1):
            for w in product(range(-shell, shell + 1), repeat=3):
                if max(abs(x) for x in w) != shell:
                    continue
                ww = ambient.square(w)
                if ww in (0, -2):
                    continue
                uw = ambient.pairing(u, w)
                disc = 4 * (uw * uw - uu * ww)
                if disc <= 0 or is_square(disc):
                    # not hyperbolic, or rationally isotropic (shared with the
                    # primitive closure, which spans the same rational plane)
                    continue
                sub = EmbeddedSublattice(ambient, [list(u), list(w)])
                closed = primitive_closure(sub)
                lat = induced_gram(closed)
                key = lat.gram
                if key in memo:
                    verdicts = memo[key]
                else:
                    q = BinaryForm(key[0][0], 2 * key[0][1], key[1][1])
                    verdicts = (
                        qform.binary_represents_zero(q),
                        qform.binary_represents(q, -2, limits),
                    )
                    memo[key] = verdicts
                zero, minus2 = verdicts
                if zero.kind == "NO" and minus2.kind == "NO":
                    return Theorem3Example(
                        generators=tuple(tuple(c) for c in closed.columns),
                        gram=key,
                        zero_verdict=zero,
                        minus2_verdict=minus2,
                        height_bound=height_bound,
                    )
    raise SearchExhausted(
        f"no double-NO primitive plane found with coordinate height <= {height_bound}",
        height_bound,
    )


def theorem3_to_json(ex: Theorem3Example) -> dict:
    return {
        "generators": [list(c) for c in ex.generators],
        "gram": [list(r) for r in ex.gram],
        "zero": verdict_to_json(ex.zero_verdict),
        "minus2": verdict_to_json(ex.minus2_verdict),
        "height_bound": ex.height_bound,
    }


# ---------------------------------------------------------------- aggregate


def _form_of_gram(gram) -> BinaryForm:
    return BinaryForm(gram[0][0], 2 * gram[0][1], gram[1][1])


def paper_verification(limits: SearchLimits | None = None, claim3_bound: int = 50) -> dict:
    """The aggregate check behind the paper-verify command: certify the five
    families, two claim3 smoke inputs, and the theorem-3 example; every NO is
    replayed through verify_certificate before a row may pass."""
    rows = []
    ok_all = True

    family_params = {1: 5}  # family 1 is exercised at n = 5
    for fid in range(1, 6):
        spec = family(fid, family_params.get(fid))
        report = certify_family(spec, limits)
        sub = EmbeddedSublattice(standard_lattice("K3"), spec.generators)
        data = PicardData(induced_gram(sub))
        row_ok = revalidate_report(data, report)
        checks = {}
        if fid == 1:
            checks["disc_group_order_is_24n"] = report.extras["disc_group_order"] == 24 * (spec.n or 0)
        if fid == 2:
            checks["at_least_10_primitive_zeros_height_30"] = (
                report.extras["primitive_zeros_height_30"] >= 10
            )
        if fid == 3:
            checks["mordell_weil_rank_1"] = report.extras["mordell_weil_rank"] == 1
            checks["c0_dot_c1_is_2"] = report.extras["c0_dot_c1"] == 2
            checks["pencil_square_0"] = report.extras["pencil_square"] == 0
        if fid == 5:
            checks["det_is_2"] = report.det == 2
        row_ok = row_ok and all(checks.values())
        ok_all = ok_all and row_ok
        rows.append(
            {
                "row": spec.label,
                "kind": "family",
                "report": report_to_json(report),
                "checks": checks,
                "pass": row_ok,
            }
        )

    for a_, b_, c_, expect in (
        (1, 0, 0, {"N": 1, "M": 2, "gram": [[2, 0], [0, -16]]}),
        (2, 1, 0, {"minus2_kind": "DIVISIBILITY", "divisor": 4}),
    ):
        res = claim3_search(Claim3Input(a_, b_, c_), claim3_bound)
        q = _form_of_gram(res.gram)
        row_ok = (
            verify_certificate(q, 0, res.zero_verdict.certificate)
            and verify_certificate(q, -2, res.minus2_verdict.certificate)
            and all(f == 1 for f in res.invariant_factors)
        )
        if "N" in expect:
            row_ok = row_ok and res.N == expect["N"] and res.M == expect["M"]
            row_ok = row_ok and [list(r) for r in res.gram] == expect["gram"]
        if "minus2_kind" in expect:
            cert = res.minus2_verdict.certificate
            row_ok = row_ok and cert is not None and cert.kind == expect["minus2_kind"]
            row_ok = row_ok and cert.data.get("divisor") == expect["divisor"]
        ok_all = ok_all and row_ok
        rows.append(
            {
                "row": f"claim3(A={a_},B={b_},C={c_})",
                "kind": "claim3",
                "result": claim3_result_to_json(res),
                "pass": row_ok,
            }
        )

    ex = theorem3_example(10, limits)
    q = _form_of_gram(ex.gram)
    row_ok = verify_certificate(q, 0, ex.zero_verdict.certificate) and verify_certificate(
        q, -2, ex.minus2_verdict.certificate
    )
    ok_all = ok_all and row_ok
    rows.append(
        {
            "row": "theorem3-example",
            "kind": "theorem3",
            "result": theorem3_to_json(ex),
            "pass": row_ok,
        }
    )

    return {"rows": rows, "all_passed": ok_all}
