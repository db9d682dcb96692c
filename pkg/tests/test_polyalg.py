"""Exact polynomial algebra, harmonic bases, su(2) matrices, Hamiltonians."""

from fractions import Fraction

import pytest

from rotorspec.errors import RepresentationClosureError
from rotorspec.polyalg import (
    QC,
    Polynomial,
    antipodal_sign,
    casimir_matrix,
    charpoly,
    eigenvalues,
    generator_matrix,
    hamiltonian_matrix,
    harmonic_basis,
    harmonic_basis_r3,
    laplacian_r3,
    laplacian_r4,
    mat_commutator,
    mat_equal,
    mat_mul,
    pairing_weights,
    rational_roots,
    sphere_laplacian_r3,
    vector_field_matrix,
)
from rotorspec.polyalg.operators import _raw_matrix
from rotorspec.polyalg.rational_linalg import mat_scale
from rotorspec.quantum_structures import BundleKind, parity_projects

Z1 = Polynomial.variable(4, 0)
Z2 = Polynomial.variable(4, 1)
ZB1 = Polynomial.variable(4, 2)
ZB2 = Polynomial.variable(4, 3)


def test_qc_field_arithmetic():
    a = QC(Fraction(1, 2), Fraction(-3, 4))
    b = QC(2, 1)
    assert a + b == QC(Fraction(5, 2), Fraction(1, 4))
    assert a * b == QC(Fraction(7, 4), Fraction(-1))
    assert (a / b) * b == a
    assert a.conjugate().conjugate() == a
    assert QC(0, 1) * QC(0, 1) == QC(-1)


def test_laplacian_r4_examples():
    assert not laplacian_r4(Z1)
    assert laplacian_r4(Z1 * ZB1) == Polynomial.constant(4, 4)
    assert not laplacian_r4(Z1 * ZB1 - Z2 * ZB2)


def test_harmonic_basis_small_cases():
    assert [str(b) for b in harmonic_basis(0, 0).basis] == ["1"]
    space = harmonic_basis(1, 0)
    assert set(map(str, space.basis)) == {"z1", "z2"}
    space = harmonic_basis(1, 1)
    assert space.dim == 3
    assert Z1 * ZB1 - Z2 * ZB2 in space.basis
    for b in space.basis:
        assert not laplacian_r4(b)
        assert b.bidegree() == (1, 1)


def test_dimension_identities():
    for d in range(9):
        dims = [harmonic_basis(p, d - p).dim for p in range(d + 1)]
        assert dims == [d + 1] * (d + 1)
        assert sum(dims) == (d + 1) ** 2


def test_generator_j3_eigenvalues():
    m = generator_matrix(3, 1, 0)
    assert m.is_diagonal()
    assert sorted(m.entries[i][i].re for i in range(2)) == [Fraction(-1, 2), Fraction(1, 2)]
    m = generator_matrix(3, 1, 1)
    assert sorted(m.entries[i][i].re for i in range(3)) == [-1, 0, 1]


def test_su2_commutators_exact():
    for d in range(7):
        for p in range(d + 1):
            q = d - p
            jm = {a: generator_matrix(a, p, q).rows() for a in (1, 2, 3)}
            lm = {a: vector_field_matrix(a, p, q).rows() for a in (1, 2, 3)}
            for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
                assert mat_equal(mat_commutator(lm[a], lm[b]), lm[c])
                assert mat_equal(mat_commutator(jm[a], jm[b]), mat_scale(jm[c], QC(0, 1)))


def test_adjointness_flags():
    assert generator_matrix(1, 2, 1).adjointness == "self"
    assert generator_matrix(2, 2, 1).adjointness == "self"
    assert vector_field_matrix(1, 2, 1).adjointness == "skew"
    assert generator_matrix(3, 0, 0).adjointness == "zero"


def test_pairing_weights_positive():
    for p, q in ((1, 0), (2, 1), (3, 3)):
        assert all(w > 0 for w in pairing_weights(p, q))


def test_casimir_values():
    c = casimir_matrix(0, 0)
    assert c.entries[0][0] == QC(0)
    c = casimir_matrix(1, 0)
    assert c.is_diagonal() and c.entries[0][0] == QC(Fraction(3, 4))
    c = casimir_matrix(2, 1)
    d = 3
    assert all(c.entries[i][i] == QC(Fraction(d * (d + 2), 4)) for i in range(c.dim))
    assert Fraction(d * (d + 2), 4) == Fraction(15, 4)


def test_casimir_commutes_with_generators_and_j3sq():
    for p, q in ((2, 0), (2, 2), (3, 1)):
        c = casimir_matrix(p, q).rows()
        for a in (1, 2, 3):
            g = generator_matrix(a, p, q).rows()
            assert all(not x for row in mat_commutator(c, g) for x in row)
        j3 = generator_matrix(3, p, q).rows()
        assert all(not x for row in mat_commutator(c, mat_mul(j3, j3)) for x in row)


def test_hamiltonian_spherical_block():
    space = harmonic_basis(1, 0)
    ham = hamiltonian_matrix(space, 1, 1, 1)
    assert ham.is_diagonal()
    assert all(ham.entries[i][i] == QC(Fraction(3, 8)) for i in range(2))
    space = harmonic_basis(0, 0)
    ham = hamiltonian_matrix(space, 2, 3, 4)
    assert ham.entries[0][0] == QC(0)


def test_hamiltonian_asymmetric_triad():
    want = sorted([Fraction(3, 4), Fraction(2, 3), Fraction(5, 12)])
    for p, q in ((2, 0), (1, 1), (0, 2)):
        ham = hamiltonian_matrix(harmonic_basis(p, q), 1, 2, 3)
        assert ham.adjointness == "self"
        vals = eigenvalues(ham)
        assert [v for v, exact in vals] == want
        assert all(exact for _, exact in vals)


def test_hamiltonian_float_path_matches_exact():
    space = harmonic_basis(2, 1)
    exact = eigenvalues(hamiltonian_matrix(space, 1, 2, 3))
    approx = eigenvalues(hamiltonian_matrix(space, 1.0, 2.0, 3.0))
    for (ve, _), (vf, _) in zip(exact, approx):
        assert float(ve) == pytest.approx(float(vf), rel=1e-12)


def test_hamiltonian_curvature_shift():
    space = harmonic_basis(1, 0)
    base = hamiltonian_matrix(space, 2, 2, 2)
    shifted = hamiltonian_matrix(space, 2, 2, 2, k=Fraction(1, 2), rho=Fraction(3, 4))
    assert shifted.entries[0][0] - base.entries[0][0] == QC(Fraction(3, 8))


def test_representation_closure_guard():
    space = harmonic_basis(1, 1)
    with pytest.raises(RepresentationClosureError):
        _raw_matrix(space, lambda f: f.mul_var(0))  # z1 * f leaves the space


def test_antipodal_parity_matches_bundles():
    for d in range(7):
        for p in range(d + 1):
            for b in harmonic_basis(p, d - p).basis:
                sign = antipodal_sign(b)
                assert sign == (-1) ** d
                assert parity_projects(d, BundleKind.PLUS) == (sign == 1)


def test_charpoly_and_rational_roots():
    m = [[QC(2), QC(1)], [QC(0), QC(3)]]
    coeffs = charpoly(m)  # (t-2)(t-3) = t^2 - 5t + 6
    assert coeffs == [Fraction(6), Fraction(-5), Fraction(1)]
    roots, residual = rational_roots(coeffs)
    assert sorted(roots) == [2, 3] and residual == [Fraction(1)]


def test_harmonic_basis_r3():
    assert [str(b) for b in harmonic_basis_r3(0).basis] == ["1"]
    assert set(map(str, harmonic_basis_r3(1).basis)) == {"x", "y", "z"}
    space = harmonic_basis_r3(2)
    assert space.dim == 5
    for b in space.basis:
        assert not laplacian_r3(b)


def test_sphere_laplacian_eigenvalue():
    for ell in (0, 1, 2, 3, 4):
        for b in harmonic_basis_r3(ell).basis:
            assert sphere_laplacian_r3(b, ell) == b.scale(-ell * (ell + 1))


def test_polynomial_evaluation_consistency():
    # basis elements restricted to S^3 are eigenfunctions of nothing here,
    # but evaluation must agree with the exact coefficients
    poly = Z1 * ZB1 - Z2 * ZB2
    z1, z2 = 0.3 + 0.4j, -0.1 + 0.9j
    val = poly.evaluate((z1, z2, z1.conjugate(), z2.conjugate()))
    assert val == pytest.approx(abs(z1) ** 2 - abs(z2) ** 2)
