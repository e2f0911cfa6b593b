"""Hyperbolic-lattice predicates behind the K3 statements: existence of
square(-2) and isotropic classes, the rank-based automorphism verdict, and
the positive-cone / ample-cone membership proxies.

Verdict provenance is explicit everywhere: PROVEN entries carry witnesses or
replayable certificates; nothing in this module asserts literature facts
(the catalog layers those on top, tagged PAPER_ASSERTED with citations).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import lattices, qform
from .embeddings import IsometryMap, discriminant_action
from .lattices import GramLattice, Signature
from .qform import (
    BinaryForm,
    DiagonalTernaryForm,
    RepresentationVerdict,
    SearchLimits,
    UnaryForm,
    verdict_to_json,
    verify_certificate,
)

__all__ = [
    "PicardData",
    "AutReport",
    "K3Report",
    "PROVEN",
    "PAPER_ASSERTED",
    "lattice_form",
    "has_minus2_class",
    "has_isotropic_class",
    "aut_verdict",
    "classify",
    "revalidate_report",
    "same_positive_cone_component",
    "g_t_membership_proxy",
    "report_to_json",
    "picard_from_json",
]

PROVEN = "PROVEN"
PAPER_ASSERTED = "PAPER_ASSERTED"

FINITE = "FINITE"
INFINITE = "INFINITE"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class PicardData:
    """A hyperbolic lattice playing the role of a K3 Picard lattice, with
    optional context: known square(-2) curve classes and a polarization."""

    lattice: GramLattice
    known_minus2_classes: tuple[tuple[int, ...], ...] = ()
    polarization: tuple[int, ...] | None = None

    def __init__(self, lattice, known_minus2_classes=(), polarization=None):
        sig = lattices.signature(lattice)
        if sig != Signature(1, lattice.rank - 1, 0):
            raise ValueError(
                f"Picard lattice must be hyperbolic of signature (1, rank-1, 0); got {tuple(sig)}"
            )
        known = tuple(tuple(int(x) for x in v) for v in known_minus2_classes)
        for v in known:
            if len(v) != lattice.rank:
                raise ValueError("curve class length does not match the rank")
            if lattice.square(v) != -2:
                raise ValueError("every known curve class must have square -2")
        pol = None
        if polarization is not None:
            pol = tuple(int(x) for x in polarization)
            if len(pol) != lattice.rank:
                raise ValueError("polarization length does not match the rank")
            if lattice.square(pol) <= 0:
                raise ValueError("polarization must have positive square")
            for v in known:
                if lattice.pairing(pol, v) <= 0:
                    raise ValueError(
                        "polarization must pair positively with every known curve class"
                    )
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "known_minus2_classes", known)
        object.__setattr__(self, "polarization", pol)

    @property
    def rank(self) -> int:
        return self.lattice.rank


def lattice_form(lattice: GramLattice):
    """The quadratic form of the lattice when a certified decider exists:
    rank 1, any rank 2, or diagonal rank 3. None otherwise."""
    g = lattice.gram_rows()
    n = lattice.rank
    if n == 1:
        return UnaryForm(g[0][0])
    if n == 2:
        return BinaryForm(g[0][0], 2 * g[0][1], g[1][1])
    if n == 3 and all(g[i][j] == 0 for i in range(3) for j in range(3) if i != j):
        return DiagonalTernaryForm(g[0][0], g[1][1], g[2][2])
    return None


def _basis_vector(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == i else 0 for k in range(n))


def _witness_scan(lattice: GramLattice, t: int):
    """Cheap YES-only scan for shapes without a certified decider: basis
    vectors, pairwise sums/differences, then a small box at low rank."""
    g = lattice.gram_rows()
    n = lattice.rank
    for i in range(n):
        if g[i][i] == t:
            return _basis_vector(n, i)
    for i in range(n):
        for j in range(i + 1, n):
            for s in (1, -1):
                if g[i][i] + g[j][j] + 2 * s * g[i][j] == t:
                    v = [0] * n
                    v[i], v[j] = 1, s
                    return tuple(v)
    if n <= 4:
        from itertools import product

        for v in product(range(-2, 3), repeat=n):
            if any(v) and lattice.square(v) == t:
                return qform._canonical_sign(v)
    return None


def _decide(data: PicardData, t: int, limits: SearchLimits | None) -> RepresentationVerdict:
    q = lattice_form(data.lattice)
    if isinstance(q, UnaryForm):
        return qform.unary_represents(q, t)
    if isinstance(q, BinaryForm):
        return qform.binary_represents(q, t, limits) if t != 0 else qform.binary_represents_zero(q)
    if isinstance(q, DiagonalTernaryForm):
        return qform.ternary_represents(q, t, limits)
    w = _witness_scan(data.lattice, t)
    if w is not None:
        return RepresentationVerdict.yes(w)
    return RepresentationVerdict.undecided(
        {"reason": "no certified decider for this lattice shape", "scan": "basis, pairs, small box"}
    )


def has_minus2_class(data: PicardData, limits: SearchLimits | None = None) -> RepresentationVerdict:
    """Existence of a class with square -2 (a smooth-rational-curve class up
    to sign, by Riemann-Roch)."""
    return _decide(data, -2, limits)


def has_isotropic_class(data: PicardData, limits: SearchLimits | None = None) -> RepresentationVerdict:
    """Existence of a nonzero class with square 0 (the lattice proxy for an
    elliptic pencil)."""
    return _decide(data, 0, limits)


@dataclass(frozen=True)
class AutReport:
    """Finiteness verdict for the automorphism group, with provenance.

    status PROVEN means the verdict follows from the attached sub-verdicts by
    the rank rules below; PAPER_ASSERTED entries (catalog overlays) carry a
    citation instead. UNKNOWN verdicts have status None.
    """

    verdict: str  # FINITE | INFINITE | UNKNOWN
    status: str | None
    reason: str
    minus2: RepresentationVerdict | None = None
    isotropic: RepresentationVerdict | None = None
    citation: str | None = None


def _aut_from_verdicts(rank: int, m2: RepresentationVerdict, iso: RepresentationVerdict) -> AutReport:
    if rank == 1:
        return AutReport(
            FINITE,
            PROVEN,
            "rank-1 Picard lattice: the only isometries are plus and minus the identity",
            m2,
            iso,
        )
    if rank == 2:
        if m2.kind == "YES" or iso.kind == "YES":
            return AutReport(
                FINITE,
                PROVEN,
                "rank 2: a square(-2) class or an isotropic class makes the automorphism group finite",
                m2,
                iso,
            )
        if m2.kind == "NO" and iso.kind == "NO":
            return AutReport(
                INFINITE,
                PROVEN,
                "rank 2: the form represents neither 0 nor -2, so the automorphism group is infinite",
                m2,
                iso,
            )
        return AutReport(UNKNOWN, None, "rank 2 with an undecided sub-verdict", m2, iso)
    if m2.kind == "NO":
        return AutReport(
            INFINITE,
            PROVEN,
            "rank >= 3 with no square(-2) class: the ample cone is the full positive cone "
            "and the isometry group of an indefinite lattice of rank >= 3 is infinite",
            m2,
            iso,
        )
    return AutReport(
        UNKNOWN,
        None,
        "rank >= 3 with square(-2) classes present (or undecided): finiteness is not decided here",
        m2,
        iso,
    )


def aut_verdict(data: PicardData, limits: SearchLimits | None = None) -> AutReport:
    """Rank-based finiteness verdict for the automorphism group, built from
    the two representability sub-verdicts."""
    m2 = has_minus2_class(data, limits)
    iso = has_isotropic_class(data, limits)
    return _aut_from_verdicts(data.rank, m2, iso)


@dataclass(frozen=True)
class K3Report:
    rank: int
    det: int
    signature: Signature
    has_minus2: RepresentationVerdict
    has_isotropic: RepresentationVerdict
    aut: AutReport
    label: str | None = None
    extras: dict = field(default_factory=dict)
    assertions: tuple = ()


def classify(data: PicardData, limits: SearchLimits | None = None, label: str | None = None) -> K3Report:
    m2 = has_minus2_class(data, limits)
    iso = has_isotropic_class(data, limits)
    return K3Report(
        rank=data.rank,
        det=lattices.det(data.lattice),
        signature=lattices.signature(data.lattice),
        has_minus2=m2,
        has_isotropic=iso,
        aut=_aut_from_verdicts(data.rank, m2, iso),
        label=label,
    )


def _verdict_ok(lattice: GramLattice, t: int, v: RepresentationVerdict) -> bool:
    if v.kind == "YES":
        w = v.witness
        if w is None or len(w) != lattice.rank:
            return False
        if t == 0 and not any(w):
            return False
        return lattice.square(w) == t
    if v.kind == "NO":
        q = lattice_form(lattice)
        if q is None or v.certificate is None:
            return False
        return verify_certificate(q, t, v.certificate)
    return True  # UNDECIDED carries no proof obligation


def revalidate_report(data: PicardData, report: K3Report) -> bool:
    """Re-check every PROVEN item of a report: witnesses evaluate correctly
    and certificates replay."""
    if not _verdict_ok(data.lattice, -2, report.has_minus2):
        return False
    if not _verdict_ok(data.lattice, 0, report.has_isotropic):
        return False
    aut = report.aut
    if aut.status == PROVEN:
        fresh = _aut_from_verdicts(
            data.rank,
            aut.minus2 if aut.minus2 is not None else report.has_minus2,
            aut.isotropic if aut.isotropic is not None else report.has_isotropic,
        )
        if fresh.verdict != aut.verdict or fresh.status != PROVEN:
            return False
    return True


def same_positive_cone_component(data: PicardData, u, v) -> bool:
    """For classes of positive square in a hyperbolic lattice: True exactly
    when u and v lie in the same component of the positive cone, which is the
    sign of their pairing."""
    lat = data.lattice if isinstance(data, PicardData) else data
    u = tuple(int(x) for x in u)
    v = tuple(int(x) for x in v)
    if lat.square(u) <= 0 or lat.square(v) <= 0:
        raise ValueError("positive-cone membership needs classes of positive square")
    return lat.pairing(u, v) > 0


def g_t_membership_proxy(data: PicardData, g: IsometryMap) -> bool:
    """Documented proxy for "g preserves the ample chamber": the discriminant
    action is trivial, g(l) stays in the positive-cone component of the
    polarization l, and g(l) pairs positively with every known curve class.
    Exact when known_minus2_classes lists all square(-2) curve classes."""
    if data.polarization is None:
        raise ValueError("the membership proxy needs a polarization")
    if g.domain.gram != data.lattice.gram:
        raise ValueError("the isometry must act on the Picard lattice itself")
    if not discriminant_action(g, data.lattice).trivial:
        return False
    gl = g.apply(data.polarization)
    if not same_positive_cone_component(data, gl, data.polarization):
        return False
    return all(data.lattice.pairing(gl, c) > 0 for c in data.known_minus2_classes)


def _aut_to_json(aut: AutReport) -> dict:
    out: dict = {"verdict": aut.verdict, "reason": aut.reason}
    if aut.status is not None:
        out["status"] = aut.status
    if aut.citation is not None:
        out["citation"] = aut.citation
    if aut.minus2 is not None:
        out["minus2"] = verdict_to_json(aut.minus2)
    if aut.isotropic is not None:
        out["isotropic"] = verdict_to_json(aut.isotropic)
    return out


def report_to_json(report: K3Report) -> dict:
    out: dict = {
        "rank": report.rank,
        "det": report.det,
        "signature": list(report.signature),
        "has_minus2": verdict_to_json(report.has_minus2),
        "has_isotropic": verdict_to_json(report.has_isotropic),
        "aut": _aut_to_json(report.aut),
    }
    if report.label is not None:
        out["label"] = report.label
    if report.extras:
        out["extras"] = dict(report.extras)
    if report.assertions:
        out["assertions"] = [dict(a) for a in report.assertions]
    return out


def picard_from_json(obj) -> PicardData:
    """Parse {"lattice": <lattice or sublattice JSON>, "known_minus2_classes":
    [[...], ...], "polarization": [...]}; sublattice input contributes its
    induced Gram matrix."""
    from .embeddings import induced_gram, sublattice_from_json

    if not isinstance(obj, dict) or "lattice" not in obj:
        raise ValueError('Picard data JSON must be an object with a "lattice" field')
    spec = obj["lattice"]
    if isinstance(spec, dict) and "ambient" in spec:
        lattice = induced_gram(sublattice_from_json(spec))
    else:
        lattice = lattices.lattice_from_json(spec)
    return PicardData(
        lattice,
        tuple(tuple(int(x) for x in v) for v in obj.get("known_minus2_classes", ())),
        obj.get("polarization"),
    )
