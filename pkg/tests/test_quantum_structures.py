"""Bundle classification constants and the parity projectability rule."""

from fractions import Fraction

import pytest

from rotorspec import (
    BundleKind,
    DegeneracyClass,
    admissible_structures,
    bundle_of_j,
    degree_of_j,
    j_of_degree,
    j_values,
    parity_projects,
)


def test_admissible_structures_nondegenerate():
    for dc in (DegeneracyClass.STRONGLY_NONDEGENERATE, DegeneracyClass.WEAKLY_NONDEGENERATE):
        s = admissible_structures(dc)
        assert s.admissible == (BundleKind.PLUS, BundleKind.MINUS)
        assert s.h2_integer == "Z2"
        assert s.h2_real == "0"


def test_admissible_structures_degenerate():
    s = admissible_structures(DegeneracyClass.DEGENERATE)
    assert s.admissible == (BundleKind.PLUS,)
    assert s.h2_integer == "Z"
    assert s.h2_real == "R"


def test_parity_examples():
    assert parity_projects(0, BundleKind.PLUS)
    assert not parity_projects(1, BundleKind.PLUS)
    assert parity_projects(1, BundleKind.MINUS)
    assert parity_projects(7, BundleKind.MINUS)


def test_exactly_one_bundle_per_degree():
    for d in range(30):
        assert parity_projects(d, BundleKind.PLUS) != parity_projects(d, BundleKind.MINUS)


def test_parity_rejects_negative_degree():
    with pytest.raises(ValueError):
        parity_projects(-1, BundleKind.PLUS)


def test_j_degree_mapping():
    assert j_of_degree(3) == Fraction(3, 2)
    assert degree_of_j(Fraction(3, 2)) == 3
    assert degree_of_j(2) == 4
    with pytest.raises(ValueError):
        degree_of_j(Fraction(1, 3))
    assert bundle_of_j(2) is BundleKind.PLUS
    assert bundle_of_j(Fraction(5, 2)) is BundleKind.MINUS


def test_j_values_series():
    assert j_values(BundleKind.PLUS, 2) == [0, 1, 2]
    assert j_values(BundleKind.MINUS, 2) == [Fraction(1, 2), Fraction(3, 2)]
    # half-integer cutoff includes the endpoint on the matching bundle
    assert j_values(BundleKind.MINUS, Fraction(5, 2))[-1] == Fraction(5, 2)
    assert j_values(BundleKind.PLUS, Fraction(5, 2))[-1] == 2
