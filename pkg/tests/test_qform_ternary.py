"""Diagonal ternary decider: isotropy, target values, zero enumeration."""

import random

import pytest

from k3lattice.ntheory import sqrt_exact
from k3lattice.qform import (
    DiagonalTernaryForm,
    SearchLimits,
    enumerate_primitive_zeros,
    ternary_represents,
    ternary_represents_zero,
    verify_certificate,
)

from oracles import ternary_zero_witness, ternary_witness


def _value(q: DiagonalTernaryForm, xyz) -> int:
    x, y, z = xyz
    return q.d1 * x * x + q.d2 * y * y + q.d3 * z * z


def test_frozen_isotropy_decisions():
    table = [
        ((1, 1, -3), "NO", "LEGENDRE"),
        ((1, 1, -2), "YES", None),
        ((2, 3, -5), "YES", None),
        ((1, 1, -7), "NO", "LEGENDRE"),
        ((1, -2, 2), "YES", None),
        ((30, -2, -2), "NO", "LEGENDRE"),
        ((15, -1, -1), "NO", "LEGENDRE"),
        ((1, 1, 1), "NO", "DEFINITE"),
        ((4, -4, -4), "YES", None),
    ]
    for coeffs, kind, cert_kind in table:
        q = DiagonalTernaryForm(*coeffs)
        v = ternary_represents_zero(q)
        assert v.kind == kind, (coeffs, v)
        if kind == "YES":
            assert _value(q, v.witness) == 0
            assert any(v.witness)
        else:
            assert v.certificate.kind == cert_kind
            assert verify_certificate(q, 0, v.certificate)


def test_legendre_certificate_details():
    v = ternary_represents_zero(DiagonalTernaryForm(1, 1, -3))
    assert v.certificate.data["modulus"] == 3
    # content is stripped before the reduced form is recorded
    v = ternary_represents_zero(DiagonalTernaryForm(30, -2, -2))
    assert v.certificate.data["reduced"] == [15, -1, -1]
    assert {"op": "content", "g": 2} in v.certificate.data["steps"]


def test_frozen_value_decisions():
    table = [
        ((4, -4, -4), -2, "NO", "DIVISIBILITY"),
        ((1, 1, 1), 7, "NO", "DEFINITE_EXHAUST"),
        ((1, 1, 1), -3, "NO", "DEFINITE"),
        ((1, 1, 1), 6, "YES", None),
        ((1, 1, -2), 5, "YES", None),
        ((30, -2, -2), -2, "YES", None),
    ]
    for coeffs, t, kind, cert_kind in table:
        q = DiagonalTernaryForm(*coeffs)
        v = ternary_represents(q, t)
        assert v.kind == kind, (coeffs, t, v)
        if kind == "YES":
            assert _value(q, v.witness) == t
        else:
            assert v.certificate.kind == cert_kind
            assert verify_certificate(q, t, v.certificate)
    v = ternary_represents(DiagonalTernaryForm(4, -4, -4), -2)
    assert v.certificate.data["divisor"] == 4


def test_zero_diagonal_rejected():
    with pytest.raises(ValueError):
        ternary_represents_zero(DiagonalTernaryForm(0, 1, 1))
    with pytest.raises(ValueError):
        ternary_represents(DiagonalTernaryForm(1, 0, -1), 3)


def test_undecided_reports_bounds():
    limits = SearchLimits(sieve_moduli=(3, 4), search_bound=1)
    v = ternary_represents(DiagonalTernaryForm(1, -1, -1), 7, limits)
    assert v.kind == "UNDECIDED"
    assert v.bounds == {"search_bound": 1, "sieve_moduli": [3, 4]}
    # the default bound finds the witness (4, 3, 0)
    v = ternary_represents(DiagonalTernaryForm(1, -1, -1), 7)
    assert v.kind == "YES"
    assert _value(DiagonalTernaryForm(1, -1, -1), v.witness) == 7


def test_isotropy_against_search_oracle():
    rng = random.Random(97)
    checked = 0
    for _ in range(200):
        d = [rng.choice([x for x in range(-9, 10) if x]) for _ in range(3)]
        q = DiagonalTernaryForm(*d)
        v = ternary_represents_zero(q)
        found = ternary_zero_witness(d[0], d[1], d[2], 25)
        if v.kind == "YES":
            assert _value(q, v.witness) == 0 and any(v.witness)
        else:
            assert v.kind == "NO"  # isotropy is always decided
            assert found is None, (d, found)
            assert verify_certificate(q, 0, v.certificate)
        if found is not None:
            assert v.kind == "YES", (d, found)
        checked += 1
    assert checked == 200


def test_values_against_search_oracle():
    rng = random.Random(98)
    for _ in range(150):
        d = [rng.choice([x for x in range(-6, 7) if x]) for _ in range(3)]
        t = rng.randint(-40, 40)
        if t == 0:
            continue
        q = DiagonalTernaryForm(*d)
        v = ternary_represents(q, t)
        found = ternary_witness(d[0], d[1], d[2], t, 30)
        if v.kind == "YES":
            assert _value(q, v.witness) == t
        elif v.kind == "NO":
            assert found is None, (d, t, found)
            assert verify_certificate(q, t, v.certificate)
        else:
            assert found is None, (d, t, found)
        if found is not None:
            assert v.kind == "YES", (d, t, found, v)


def test_enumerate_primitive_zeros_frozen():
    zeros = enumerate_primitive_zeros(DiagonalTernaryForm(1, 1, -2), 5)
    assert zeros == [(1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1)]
    assert enumerate_primitive_zeros(DiagonalTernaryForm(1, 1, 1), 10) == []
    with pytest.raises(ValueError):
        enumerate_primitive_zeros(DiagonalTernaryForm(1, 1, -2), -1)


def test_enumerate_primitive_zeros_against_brute_force():
    from math import gcd

    def brute(d, h):
        out = set()
        for x in range(-h, h + 1):
            for y in range(-h, h + 1):
                for z in range(-h, h + 1):
                    if (x, y, z) == (0, 0, 0):
                        continue
                    if d[0] * x * x + d[1] * y * y + d[2] * z * z:
                        continue
                    if gcd(gcd(x, y), z) != 1:
                        continue
                    v = (x, y, z)
                    for lead in v:
                        if lead:
                            break
                    if lead < 0:
                        v = (-x, -y, -z)
                    out.add(v)
        return sorted(out)

    for d in [(1, 1, -2), (4, -4, -4), (2, 3, -5), (1, -2, 2)]:
        got = enumerate_primitive_zeros(DiagonalTernaryForm(*d), 8)
        assert got == brute(d, 8), d
        for w in got:
            assert _value(DiagonalTernaryForm(*d), w) == 0
            assert sqrt_exact(max(abs(c) for c in w) ** 2) <= 8
