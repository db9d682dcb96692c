"""Inertia tensor, top classification and curvature closed forms."""

from fractions import Fraction

import numpy as np
import pytest

from rotorspec import (
    ParticleSystem,
    TopClass,
    canonicalize,
    classify_top,
    inertia_tensor,
    principal_momenta,
    scalar_curvature,
    scalar_curvature_oracle,
)
from rotorspec.inertia import (
    curvature_asymmetric,
    curvature_degenerate,
    curvature_spherical,
    curvature_symmetric,
)

CUBE = [[sx, sy, sz] for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)]


def _config(masses, positions):
    masses = np.asarray(masses, dtype=float)
    system = ParticleSystem(masses=masses, charges=np.zeros_like(masses), positions=positions)
    return canonicalize(system)


def test_dipole_inertia_tensor():
    a = 1.4
    config = _config([1, 1], [[a, 0, 0], [-a, 0, 0]])
    mat = inertia_tensor(config).matrix
    assert np.allclose(mat, np.diag([0.0, 2 * a**2, 2 * a**2]))
    pm = principal_momenta(inertia_tensor(config), config.degeneracy)
    assert pm.top_class is TopClass.DEGENERATE
    assert pm.transverse_momentum == pytest.approx(2 * a**2)


def test_cube_is_spherical():
    config = _config(np.ones(8), CUBE)
    tensor = inertia_tensor(config)
    assert np.allclose(tensor.matrix, 16.0 * np.eye(3))
    pm = principal_momenta(tensor, config.degeneracy)
    assert pm.top_class is TopClass.SPHERICAL


def test_trace_identity():
    rng = np.random.default_rng(0)
    config = _config([1, 2, 3, 4], rng.uniform(-2, 2, (4, 3)))
    tensor = inertia_tensor(config)
    expect = 2 * np.sum(config.masses * np.einsum("ij,ij->i", config.relatives, config.relatives))
    assert tensor.trace == pytest.approx(expect)
    vals = np.linalg.eigvalsh(tensor.matrix)
    assert np.all(vals >= -1e-12)


def test_water_like_triangle_is_asymmetric():
    config = _config([16, 1, 1], [[0, 0, 0], [0.96, 0, 0], [-0.24, 0.93, 0]])
    pm = principal_momenta(inertia_tensor(config), config.degeneracy)
    assert pm.top_class is TopClass.ASYMMETRIC
    i1, i2, i3 = pm.momenta
    assert i1 < i2 < i3


def test_classify_top_rules():
    assert classify_top((16, 16, 16)) is TopClass.SPHERICAL
    assert classify_top((2, 2, 5)) is TopClass.SYMMETRIC
    assert classify_top((1, 2, 3)) is TopClass.ASYMMETRIC
    from rotorspec import DegeneracyClass

    assert classify_top((0, 2, 2), DegeneracyClass.DEGENERATE) is TopClass.DEGENERATE


def test_symmetric_pair_and_axis_assignment():
    # oblate square in the xy plane: momenta (2, 2, 4)
    config = _config(np.ones(4), [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]])
    pm = principal_momenta(inertia_tensor(config), config.degeneracy)
    assert pm.top_class is TopClass.SYMMETRIC
    assert pm.pair_momentum == pytest.approx(2.0)
    assert pm.axis_momentum == pytest.approx(4.0)


def test_eigendecomposition_reproduces_tensor():
    rng = np.random.default_rng(7)
    for _ in range(20):
        config = _config(rng.uniform(0.5, 3, 5), rng.uniform(-2, 2, (5, 3)))
        tensor = inertia_tensor(config)
        pm = principal_momenta(tensor, config.degeneracy)
        rebuilt = pm.axes @ np.diag(pm.momenta) @ pm.axes.T
        scale = max(np.linalg.norm(tensor.matrix, 2), 1e-300)
        assert np.linalg.norm(rebuilt - tensor.matrix, 2) <= 1e-9 * scale
        assert np.linalg.det(pm.axes) == pytest.approx(1.0)


def test_parallel_axis_sanity():
    rng = np.random.default_rng(1)
    positions = rng.uniform(-2, 2, (5, 3))
    masses = rng.uniform(0.5, 3, 5)
    base = inertia_tensor(_config(masses, positions)).matrix
    shifted = inertia_tensor(_config(masses, positions + np.array([10.0, -4.0, 7.0]))).matrix
    assert np.allclose(base, shifted, atol=1e-9)


def test_rotation_conjugates_tensor_and_preserves_momenta():
    rng = np.random.default_rng(2)
    positions = rng.uniform(-2, 2, (5, 3))
    masses = rng.uniform(0.5, 3, 5)
    theta, axis = 0.8, np.array([1.0, 2.0, 2.0]) / 3.0
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(3) + np.sin(theta) * k + (1 - np.cos(theta)) * (k @ k)
    base = inertia_tensor(_config(masses, positions))
    moved = inertia_tensor(_config(masses, positions @ rot.T))
    assert np.allclose(moved.matrix, rot @ base.matrix @ rot.T, atol=1e-10)
    pm_base = principal_momenta(base)
    pm_moved = principal_momenta(moved)
    assert np.allclose(pm_base.momenta, pm_moved.momenta, atol=1e-10)


def test_degenerate_transverse_plane_is_isotropic():
    # collinear body along an arbitrary axis: M restricted to the transverse
    # plane is I times the identity (proportionality of the two metrics)
    axis = np.array([1.0, 2.0, -1.0])
    axis /= np.linalg.norm(axis)
    offsets = np.array([-1.5, 0.4, 2.0])
    masses = np.array([1.0, 2.0, 0.7])
    config = _config(masses, np.outer(offsets, axis))
    mat = inertia_tensor(config).matrix
    pm = principal_momenta(inertia_tensor(config), config.degeneracy)
    i_trans = pm.transverse_momentum
    proj = np.eye(3) - np.outer(axis, axis)
    assert np.allclose(proj @ mat @ proj, i_trans * proj, atol=1e-10)
    expect = np.sum(config.masses * np.einsum("ij,ij->i", config.relatives, config.relatives))
    assert i_trans == pytest.approx(expect)


# --- scalar curvature ---------------------------------------------------------


def test_curvature_closed_form_examples():
    assert curvature_spherical(2, 1) == Fraction(3, 4)
    assert curvature_symmetric(2, 1, 1) == Fraction(7, 8)
    assert curvature_asymmetric(1, 2, 3, 1) == Fraction(2, 3)
    assert curvature_degenerate(2, 1) == 1


def test_asymmetric_reduces_to_spherical():
    for i_val in (Fraction(1), Fraction(5, 3), Fraction(12)):
        assert curvature_asymmetric(i_val, i_val, i_val) == curvature_spherical(i_val)


def test_scalar_curvature_dispatch():
    assert scalar_curvature(TopClass.SPHERICAL, (2.0, 2.0, 2.0)) == pytest.approx(0.75)
    assert scalar_curvature(TopClass.SYMMETRIC, (2.0, 1.0)) == pytest.approx(0.875)
    assert scalar_curvature(TopClass.ASYMMETRIC, (1.0, 2.0, 3.0)) == pytest.approx(2 / 3)
    assert scalar_curvature(TopClass.DEGENERATE, 2.0) == pytest.approx(1.0)


def test_oracle_spherical_and_asymmetric_values():
    assert scalar_curvature_oracle(2, 2, 2) == pytest.approx(0.75, rel=1e-12)
    assert scalar_curvature_oracle(1, 2, 3) == pytest.approx(2 / 3, rel=1e-12)


def test_oracle_scaling_homogeneity():
    rng = np.random.default_rng(4)
    for _ in range(50):
        i1, i2, i3 = rng.uniform(0.2, 20, 3)
        c = rng.uniform(0.1, 10)
        assert scalar_curvature_oracle(c * i1, c * i2, c * i3) == pytest.approx(
            scalar_curvature_oracle(i1, i2, i3) / c, rel=1e-10
        )


def test_oracle_matches_closed_forms_randomized():
    rng = np.random.default_rng(6)
    for _ in range(200):
        i1, i2, i3 = sorted(rng.uniform(0.1, 40, 3))
        lhs = curvature_asymmetric(i1, i2, i3)
        assert abs(lhs - scalar_curvature_oracle(i1, i2, i3)) <= 1e-10 * max(1, abs(lhs))
        pair, ax = rng.uniform(0.1, 40, 2)
        lhs = curvature_symmetric(pair, ax)
        assert abs(lhs - scalar_curvature_oracle(ax, pair, pair)) <= 1e-10 * max(1, abs(lhs))


def test_oracle_rejects_nonpositive():
    with pytest.raises(ValueError):
        scalar_curvature_oracle(0.0, 1.0, 1.0)
