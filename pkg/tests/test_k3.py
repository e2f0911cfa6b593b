"""Hyperbolic-lattice classification: verdicts, provenance, cone proxies."""

import dataclasses

import pytest

from k3lattice.embeddings import IsometryMap
from k3lattice.k3 import (
    PicardData,
    classify,
    g_t_membership_proxy,
    has_isotropic_class,
    has_minus2_class,
    lattice_form,
    picard_from_json,
    report_to_json,
    revalidate_report,
    same_positive_cone_component,
)
from k3lattice.lattices import GramLattice, lattice_to_json, standard_lattice
from k3lattice.qform import (
    BinaryForm,
    Certificate,
    DiagonalTernaryForm,
    RepresentationVerdict,
    UnaryForm,
)


def _diag(*entries):
    n = len(entries)
    return GramLattice(n, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


U = standard_lattice("U")


def test_picard_data_validation():
    with pytest.raises(ValueError):
        PicardData(_diag(2, 2))  # positive definite
    with pytest.raises(ValueError):
        PicardData(_diag(-2, -2))  # negative definite
    with pytest.raises(ValueError):
        PicardData(U, known_minus2_classes=[(1, 0, 0)])  # wrong length
    with pytest.raises(ValueError):
        PicardData(U, known_minus2_classes=[(1, 0)])  # square 0, not -2
    with pytest.raises(ValueError):
        PicardData(U, polarization=(1, 0))  # square 0
    with pytest.raises(ValueError):
        PicardData(U, polarization=(1,))  # wrong length
    with pytest.raises(ValueError):
        # polarization pairs negatively with the listed curve class
        PicardData(U, known_minus2_classes=[(1, -1)], polarization=(1, 1))
    data = PicardData(U, known_minus2_classes=[(1, -1)], polarization=(1, 2))
    assert data.rank == 2 and data.polarization == (1, 2)


def test_lattice_form_shapes():
    assert lattice_form(_diag(2)) == UnaryForm(2)
    # the binary form doubles the off-diagonal pairing
    assert lattice_form(U) == BinaryForm(0, 2, 0)
    assert lattice_form(_diag(6, -2, -2)) == DiagonalTernaryForm(6, -2, -2)
    non_diag3 = GramLattice(3, [[0, 1, 0], [1, 0, 0], [0, 0, -8]])
    assert lattice_form(non_diag3) is None
    assert lattice_form(_diag(2, -2, -2, -2)) is None


def test_classify_hyperbolic_plane():
    report = classify(PicardData(U))
    assert report.rank == 2 and report.det == -1
    assert tuple(report.signature) == (1, 1, 0)
    assert report.has_minus2.kind == "YES"
    assert U.square(report.has_minus2.witness) == -2
    assert report.has_isotropic.kind == "YES"
    assert any(report.has_isotropic.witness)
    assert U.square(report.has_isotropic.witness) == 0
    assert report.aut.verdict == "FINITE"
    assert report.aut.status == "PROVEN"


def test_classify_rank_one():
    report = classify(PicardData(_diag(2)))
    assert report.det == 2
    assert report.has_minus2.kind == "NO"
    assert report.has_isotropic.kind == "NO"
    assert report.aut.verdict == "FINITE" and report.aut.status == "PROVEN"


def test_classify_diagonal_rank_three():
    # square(-2) classes exist, no isotropic class: finiteness stays open here
    report = classify(PicardData(_diag(6, -2, -2)))
    assert report.has_minus2.kind == "YES"
    assert report.has_isotropic.kind == "NO"
    assert report.has_isotropic.certificate.kind == "LEGENDRE"
    assert report.aut.verdict == "UNKNOWN"
    assert report.aut.status is None
    # no square(-2) class at all: infinite, proven by the certificate
    report = classify(PicardData(_diag(4, -4, -4)))
    assert report.has_minus2.kind == "NO"
    assert report.has_minus2.certificate.kind == "DIVISIBILITY"
    assert report.has_isotropic.kind == "YES"
    assert report.aut.verdict == "INFINITE" and report.aut.status == "PROVEN"


def test_classify_non_diagonal_rank_three():
    # U + <-8> has no certified rank-3 decider; the witness scan still
    # settles both YES questions
    lat = GramLattice(3, [[0, 1, 0], [1, 0, 0], [0, 0, -8]])
    report = classify(PicardData(lat))
    assert report.has_minus2.kind == "YES"
    assert lat.square(report.has_minus2.witness) == -2
    assert report.has_isotropic.kind == "YES"
    assert report.aut.verdict == "UNKNOWN" and report.aut.status is None


def test_verdict_helpers_match_classify():
    data = PicardData(_diag(4, -4, -4))
    report = classify(data)
    assert has_minus2_class(data) == report.has_minus2
    assert has_isotropic_class(data) == report.has_isotropic


def test_revalidate_report_accepts_honest_and_rejects_tampered():
    for lat in [U, _diag(2), _diag(6, -2, -2), _diag(4, -4, -4)]:
        data = PicardData(lat)
        report = classify(data)
        assert revalidate_report(data, report)

    data = PicardData(_diag(4, -4, -4))
    report = classify(data)
    # wrong witness vector
    bad = dataclasses.replace(
        report, has_isotropic=RepresentationVerdict.yes((1, 1, 1))
    )
    assert not revalidate_report(data, bad)
    # zero vector can never witness t = 0
    bad = dataclasses.replace(
        report, has_isotropic=RepresentationVerdict.yes((0, 0, 0))
    )
    assert not revalidate_report(data, bad)
    # broken certificate
    bad = dataclasses.replace(
        report,
        has_minus2=RepresentationVerdict.no(Certificate("DIVISIBILITY", {"divisor": 3})),
    )
    assert not revalidate_report(data, bad)
    # flipped proven aut verdict
    bad = dataclasses.replace(report, aut=dataclasses.replace(report.aut, verdict="FINITE"))
    assert not revalidate_report(data, bad)


def test_same_positive_cone_component():
    data = PicardData(U)
    assert same_positive_cone_component(data, (1, 1), (2, 1))
    assert not same_positive_cone_component(data, (1, 1), (-1, -1))
    # also accepts a bare lattice
    assert same_positive_cone_component(U, (1, 1), (1, 2))
    with pytest.raises(ValueError):
        same_positive_cone_component(data, (1, 0), (1, 1))  # square 0
    with pytest.raises(ValueError):
        same_positive_cone_component(data, (1, 1), (1, -1))  # square -2


def test_g_t_membership_proxy():
    data = PicardData(U, known_minus2_classes=[(1, -1)], polarization=(1, 2))
    identity = IsometryMap(U, [[1, 0], [0, 1]])
    minus_identity = IsometryMap(U, [[-1, 0], [0, -1]])
    assert g_t_membership_proxy(data, identity) is True
    assert g_t_membership_proxy(data, minus_identity) is False
    swap = IsometryMap(U, [[0, 1], [1, 0]])
    # swap fixes the polarization's component but flips the curve class
    assert g_t_membership_proxy(data, swap) is False
    with pytest.raises(ValueError):
        g_t_membership_proxy(PicardData(U), identity)  # no polarization
    with pytest.raises(ValueError):
        g_t_membership_proxy(data, IsometryMap(_diag(2, -2), [[1, 0], [0, 1]]))


def test_report_json_shape():
    report = classify(PicardData(_diag(6, -2, -2)), label="demo")
    out = report_to_json(report)
    assert out["label"] == "demo"
    assert out["signature"] == [1, 2, 0]
    assert out["has_minus2"]["kind"] == "YES"
    assert out["has_isotropic"]["certificate"]["kind"] == "LEGENDRE"
    # UNKNOWN verdicts carry no provenance status at all
    assert out["aut"]["verdict"] == "UNKNOWN"
    assert "status" not in out["aut"]
    report = classify(PicardData(U))
    assert report_to_json(report)["aut"]["status"] == "PROVEN"


def test_picard_from_json():
    obj = {
        "lattice": lattice_to_json(U),
        "known_minus2_classes": [[1, -1]],
        "polarization": [1, 2],
    }
    data = picard_from_json(obj)
    assert data.lattice.gram == U.gram
    assert data.known_minus2_classes == ((1, -1),)
    assert data.polarization == (1, 2)
    # a sublattice spec contributes its induced Gram matrix
    amb = lattice_to_json(standard_lattice("K3"))
    sub = {"ambient": amb, "basis": [[1] + [0] * 21, [0, 1] + [0] * 20]}
    data = picard_from_json({"lattice": sub})
    assert data.lattice.gram_rows() == [[0, 1], [1, 0]]
    with pytest.raises(ValueError):
        picard_from_json({"known_minus2_classes": []})
    with pytest.raises(ValueError):
        picard_from_json([])
