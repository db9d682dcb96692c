"""Rotational spectra: closed forms per top class plus the brute-force
block-diagonalization engine for the asymmetric case.

Every spectrum is a sorted list of lines (energy, quantum numbers,
multiplicity, bundle, eigensection references).  Energies are exact
Fractions whenever all inputs are rational, floats otherwise; degeneracy
grouping is exact in the rational case.

Closed forms implemented (free body, inertial observer, curvature shift
k * rho added to every level):

    spherical   E_j   = hbar0/(2I) j(j+1)
    symmetric   E_jl  = hbar0/(2 I_pair) j(j+1)
                      + hbar0/2 (1/I_axis - 1/I_pair) l^2
    degenerate  E_l   = hbar0/(2I) l(l+1)            on S^2, multiplicity 2l+1
    monopole    E_jl  = symmetric  - nu |q| l / I_axis
                      + nu^2 |q|^2 / (2 I_axis hbar0)

with j integer on the trivial bundle and half-odd on the non-trivial one,
and l stepping through -j..j with the parity of j.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Rational

import numpy as np

from .defaults import DEFAULT_TOLERANCES, J_MAX_CAP, Tolerances
from .geometry import RigidConfiguration
from .inertia import (
    TopClass,
    curvature_asymmetric,
    curvature_degenerate,
    curvature_spherical,
    curvature_symmetric,
)
from .polyalg import eigenvalues, hamiltonian_matrix, harmonic_basis
from .quantum_structures import BundleKind, j_values


def _check_j_max(j_max):
    if Fraction(j_max) * 2 % 1 != 0 or j_max < 0:
        raise ValueError("j_max must be a nonnegative half-integer")
    if j_max > J_MAX_CAP:
        raise ValueError(f"j_max exceeds the hard cap {J_MAX_CAP}")


@dataclass(frozen=True)
class SpectralLine:
    """One eigenvalue with its quantum numbers.

    l is None when the level is labeled by j alone (spherical and
    diagonalized spectra).  eigensections holds (p, q, index) references
    into the harmonic bases; the degenerate case uses (degree, None, index).
    """

    energy: object
    j: Fraction
    multiplicity: int
    bundle: BundleKind
    l: Fraction | None = None
    source: str = "closed-form"
    eigensections: tuple | None = None

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if Fraction(self.j).denominator == 1:
            ok = self.bundle is BundleKind.PLUS
        else:
            ok = self.bundle is BundleKind.MINUS
        if not ok:
            raise ValueError(f"bundle {self.bundle} inconsistent with j = {self.j}")

    @property
    def sort_key(self):
        lv = float(self.l) if self.l is not None else float("-inf")
        return (float(self.energy), float(self.j), lv)


@dataclass(frozen=True)
class Spectrum:
    """Sorted spectral lines up to a cutoff, with the defining parameters."""

    lines: tuple[SpectralLine, ...]
    kind: str
    bundle: BundleKind | None
    top_class: TopClass | None
    params: dict = field(default_factory=dict)
    k: object = 0
    hbar0: object = 1
    j_max: object = 0

    def __post_init__(self):
        object.__setattr__(
            self, "lines", tuple(sorted(self.lines, key=lambda ln: ln.sort_key))
        )

    def total_multiplicity(self) -> int:
        return sum(ln.multiplicity for ln in self.lines)

    def lines_for_degree(self, d: int) -> list[SpectralLine]:
        return [ln for ln in self.lines if ln.j == Fraction(d, 2)]

    def group_by_energy(self, eps_spec: float = DEFAULT_TOLERANCES.spec):
        """Merge lines with coinciding energy (arithmetical degeneracy).

        Grouping is exact when every energy is rational, else relative
        within eps_spec.  Returns (energy, total multiplicity, lines) triples
        sorted by energy.
        """
        if not self.lines:
            return []
        exact = all(isinstance(ln.energy, Rational) for ln in self.lines)
        groups: list[list[SpectralLine]] = []
        for ln in self.lines:  # lines are already sorted by energy
            if groups:
                ref = groups[-1][0].energy
                if exact:
                    same = ln.energy == ref
                else:
                    same = abs(float(ln.energy) - float(ref)) <= eps_spec * max(
                        1.0, abs(float(ref))
                    )
                if same:
                    groups[-1].append(ln)
                    continue
            groups.append([ln])
        return [
            (g[0].energy, sum(x.multiplicity for x in g), tuple(g)) for g in groups
        ]


# --- curvature shift --------------------------------------------------------


def curvature_shift(k, top_class: TopClass, momenta, hbar0=1):
    """Additive constant k * rho added to every level, with rho the scalar
    curvature closed form of the top class; k = 0 (the default everywhere)
    turns it off."""
    if k == 0:
        return Fraction(0) if isinstance(k, Rational) else 0.0
    if top_class is TopClass.SPHERICAL:
        rho = curvature_spherical(momenta[0], hbar0)
    elif top_class is TopClass.SYMMETRIC:
        rho = curvature_symmetric(momenta[0], momenta[1], hbar0)
    elif top_class is TopClass.ASYMMETRIC:
        rho = curvature_asymmetric(momenta[0], momenta[1], momenta[2], hbar0)
    elif top_class is TopClass.DEGENERATE:
        rho = curvature_degenerate(momenta[0], hbar0)
    else:
        raise ValueError(top_class)
    return k * rho


def _exactify(*values):
    """Map rational inputs to Fractions so downstream arithmetic is exact;
    leave floats alone."""
    return tuple(Fraction(v) if isinstance(v, Rational) else float(v) for v in values)


# --- closed-form spectra ------------------------------------------------------


def j_squared_spectrum(bundle: BundleKind, j_max, hbar0=1) -> Spectrum:
    """Spectrum of the squared angular momentum: hbar0^2 j(j+1) with
    multiplicity (2j+1)^2."""
    _check_j_max(j_max)
    (h,) = _exactify(hbar0)
    lines = []
    for j in j_values(bundle, j_max):
        e = h * h * j * (j + 1)
        lines.append(
            SpectralLine(
                energy=e,
                j=j,
                multiplicity=int((2 * j + 1) ** 2),
                bundle=bundle,
                source="closed-form",
            )
        )
    return Spectrum(
        lines=tuple(lines),
        kind="j_squared",
        bundle=bundle,
        top_class=None,
        params={},
        hbar0=h,
        j_max=Fraction(j_max),
    )


def _degree_blocks(d: int):
    return [(p, d - p) for p in range(d + 1)]


def spherical_spectrum(i_mom, bundle: BundleKind, k=0, hbar0=1, j_max=6) -> Spectrum:
    """E_j = hbar0/(2I) j(j+1) + k rho, multiplicity (2j+1)^2; eigensections
    are all degree-2j harmonic polynomials."""
    _check_j_max(j_max)
    if float(i_mom) <= 0:
        raise ValueError("momentum must be positive")
    i_mom, k, h = _exactify(i_mom, k, hbar0)
    shift = curvature_shift(k, TopClass.SPHERICAL, (i_mom,), h)
    lines = []
    for j in j_values(bundle, j_max):
        d = int(2 * j)
        e = h / (2 * i_mom) * j * (j + 1) + shift
        refs = tuple(
            (p, q, idx) for (p, q) in _degree_blocks(d) for idx in range(d + 1)
        )
        lines.append(
            SpectralLine(
                energy=e,
                j=j,
                multiplicity=int((2 * j + 1) ** 2),
                bundle=bundle,
                source="closed-form",
                eigensections=refs,
            )
        )
    return Spectrum(
        lines=tuple(lines),
        kind="spherical",
        bundle=bundle,
        top_class=TopClass.SPHERICAL,
        params={"I": i_mom},
        k=k,
        hbar0=h,
        j_max=Fraction(j_max),
    )


def symmetric_spectrum(
    i_pair, i_axis, bundle: BundleKind, k=0, hbar0=1, j_max=6
) -> Spectrum:
    """Symmetric-top levels indexed by (j, |l|).

    The symmetry axis carries i_axis, the repeated pair i_pair; l steps from
    -j to j with the parity of j.  Multiplicity is (2j+1) at l = 0 and
    2(2j+1) otherwise.  Coinciding energies across different (j, l) stay as
    separate lines; use Spectrum.group_by_energy for the merged view.
    """
    _check_j_max(j_max)
    if float(i_pair) <= 0 or float(i_axis) <= 0:
        raise ValueError("momenta must be positive")
    if i_pair == i_axis:
        return spherical_spectrum(i_pair, bundle, k, hbar0, j_max)
    i_pair, i_axis, k, h = _exactify(i_pair, i_axis, k, hbar0)
    shift = curvature_shift(k, TopClass.SYMMETRIC, (i_pair, i_axis), h)
    lines = []
    for j in j_values(bundle, j_max):
        d = int(2 * j)
        abs_l = Fraction(0) if j.denominator == 1 else Fraction(1, 2)
        while abs_l <= j:
            e = (
                h / (2 * i_pair) * j * (j + 1)
                + h / 2 * (1 / i_axis - 1 / i_pair) * abs_l * abs_l
                + shift
            )
            if abs_l == 0:
                mult = int(2 * j + 1)
                indices = (int(j),)
            else:
                mult = 2 * int(2 * j + 1)
                indices = (int(j - abs_l), int(j + abs_l))
            refs = tuple(
                (p, q, idx) for (p, q) in _degree_blocks(d) for idx in indices
            )
            lines.append(
                SpectralLine(
                    energy=e,
                    j=j,
                    l=abs_l,
                    multiplicity=mult,
                    bundle=bundle,
                    source="closed-form",
                    eigensections=refs,
                )
            )
            abs_l += 1
    return Spectrum(
        lines=tuple(lines),
        kind="symmetric",
        bundle=bundle,
        top_class=TopClass.SYMMETRIC,
        params={"I_pair": i_pair, "I_axis": i_axis},
        k=k,
        hbar0=h,
        j_max=Fraction(j_max),
    )


def degenerate_spectrum(i_mom, k=0, hbar0=1, l_max=6) -> Spectrum:
    """Collinear body: S^2 levels hbar0/(2I) l(l+1) with multiplicity 2l+1,
    eigensections the degree-l harmonic polynomials on R^3 (only the trivial
    bundle exists here)."""
    if int(l_max) != l_max or l_max < 0:
        raise ValueError("l_max must be a nonnegative integer")
    if l_max > J_MAX_CAP:
        raise ValueError(f"l_max exceeds the hard cap {J_MAX_CAP}")
    if float(i_mom) <= 0:
        raise ValueError("momentum must be positive")
    i_mom, k, h = _exactify(i_mom, k, hbar0)
    shift = curvature_shift(k, TopClass.DEGENERATE, (i_mom,), h)
    lines = []
    for ell in range(int(l_max) + 1):
        e = h / (2 * i_mom) * ell * (ell + 1) + shift
        refs = tuple((ell, None, idx) for idx in range(2 * ell + 1))
        lines.append(
            SpectralLine(
                energy=e,
                j=Fraction(ell),
                multiplicity=2 * ell + 1,
                bundle=BundleKind.PLUS,
                source="closed-form",
                eigensections=refs,
            )
        )
    return Spectrum(
        lines=tuple(lines),
        kind="degenerate",
        bundle=BundleKind.PLUS,
        top_class=TopClass.DEGENERATE,
        params={"I": i_mom},
        k=k,
        hbar0=h,
        j_max=Fraction(int(l_max)),
    )


def monopole_spectrum(
    i_pair, i_axis, bundle: BundleKind, nu, q_center_norm, k=0, hbar0=1, j_max=6
) -> Spectrum:
    """Symmetric top with a magnetic monopole at a fixed point.

    The term linear in l breaks the +-l degeneracy, so lines carry signed l
    and multiplicity 2j+1.  With nu = 0 this reduces termwise to the free
    symmetric spectrum.
    """
    _check_j_max(j_max)
    if float(i_pair) <= 0 or float(i_axis) <= 0:
        raise ValueError("momenta must be positive")
    if float(q_center_norm) < 0:
        raise ValueError("the center-of-charge norm must be nonnegative")
    i_pair, i_axis, nu, qn, k, h = _exactify(i_pair, i_axis, nu, q_center_norm, k, hbar0)
    shift = curvature_shift(k, TopClass.SYMMETRIC, (i_pair, i_axis), h)
    lines = []
    for j in j_values(bundle, j_max):
        d = int(2 * j)
        l = -j
        while l <= j:
            e = (
                h / (2 * i_pair) * j * (j + 1)
                + h / 2 * (1 / i_axis - 1 / i_pair) * l * l
                - nu * qn / i_axis * l
                + nu * nu * qn * qn / (2 * i_axis * h)
                + shift
            )
            refs = tuple((p, q, int(j + l)) for (p, q) in _degree_blocks(d))
            lines.append(
                SpectralLine(
                    energy=e,
                    j=j,
                    l=l,
                    multiplicity=int(2 * j + 1),
                    bundle=bundle,
                    source="closed-form",
                    eigensections=refs,
                )
            )
            l += 1
    return Spectrum(
        lines=tuple(lines),
        kind="monopole",
        bundle=bundle,
        top_class=TopClass.SYMMETRIC,
        params={"I_pair": i_pair, "I_axis": i_axis, "nu": nu, "q_norm": qn},
        k=k,
        hbar0=h,
        j_max=Fraction(j_max),
    )


# --- brute-force engine -------------------------------------------------------


def _class_of_triple(i1, i2, i3, eps_rel):
    scale = max(float(i1), float(i2), float(i3))
    eq12 = abs(float(i2) - float(i1)) <= eps_rel * scale
    eq23 = abs(float(i3) - float(i2)) <= eps_rel * scale
    eq13 = abs(float(i3) - float(i1)) <= eps_rel * scale
    if eq12 and eq23:
        return TopClass.SPHERICAL, None
    if eq12:
        return TopClass.SYMMETRIC, ((i1 + i2) / 2, i3)
    if eq23:
        return TopClass.SYMMETRIC, ((i2 + i3) / 2, i1)
    if eq13:
        return TopClass.SYMMETRIC, ((i1 + i3) / 2, i2)
    return TopClass.ASYMMETRIC, None


def diagonalized_spectrum(
    i1,
    i2,
    i3,
    bundle: BundleKind,
    k=0,
    hbar0=1,
    j_max=6,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Spectrum:
    """Spectrum by exact block diagonalization on every H^{p,q}.

    For each total degree d = 2j of the bundle's parity the Hamiltonian is
    diagonalized on the d+1 bidegree blocks and the eigenvalues are merged;
    multiplicities come from grouping (exact under rational inputs and
    degrees <= 4, within tol.spec otherwise).  This is the oracle route the
    closed forms are verified against, and the production route for the
    asymmetric top.
    """
    _check_j_max(j_max)
    if min(float(i1), float(i2), float(i3)) <= 0:
        raise ValueError("momenta must be positive")
    i1, i2, i3, k, h = _exactify(i1, i2, i3, k, hbar0)
    top, sym_pair = _class_of_triple(i1, i2, i3, tol.rel)
    if top is TopClass.SPHERICAL:
        rho_args = (i1,)
    elif top is TopClass.SYMMETRIC:
        rho_args = sym_pair
    else:
        rho_args = (i1, i2, i3)
    rho = curvature_shift(1, top, rho_args, h) if k != 0 else 0
    lines = []
    for j in j_values(bundle, j_max):
        d = int(2 * j)
        found: list[tuple[object, bool, tuple]] = []
        for p, q in _degree_blocks(d):
            space = harmonic_basis(p, q)
            ham = hamiltonian_matrix(space, i1, i2, i3, h, k, rho)
            evs = eigenvalues(ham, prefer_exact=(d <= 4))
            for idx, (value, exact) in enumerate(evs):
                found.append((value, exact, (p, q, idx)))
        for energy, mult, refs in _merge_block_values(found, tol.spec):
            lines.append(
                SpectralLine(
                    energy=energy,
                    j=j,
                    multiplicity=mult,
                    bundle=bundle,
                    source="diagonalized",
                    eigensections=refs,
                )
            )
    return Spectrum(
        lines=tuple(lines),
        kind="diagonalized",
        bundle=bundle,
        top_class=top,
        params={"I1": i1, "I2": i2, "I3": i3},
        k=k,
        hbar0=h,
        j_max=Fraction(j_max),
    )


def _merge_block_values(found, eps_spec):
    """Group (value, exact, ref) triples into (energy, multiplicity, refs)."""
    all_exact = all(e for _, e, _ in found)
    ordered = sorted(found, key=lambda t: float(t[0]))
    groups = []
    for value, _, ref in ordered:
        if groups:
            ref_val = groups[-1][0]
            if all_exact:
                same = value == ref_val
            else:
                same = abs(float(value) - float(ref_val)) <= eps_spec * max(
                    1.0, abs(float(ref_val))
                )
            if same:
                groups[-1][1].append(ref)
                continue
        groups.append([value, [ref]])
    return [(v, len(refs), tuple(refs)) for v, refs in groups]


def asymmetric_spectrum(
    i1,
    i2,
    i3,
    bundle: BundleKind,
    k=0,
    hbar0=1,
    j_max=6,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Spectrum:
    """Asymmetric-top spectrum by block diagonalization.

    Near-coinciding momenta are routed to the matching closed form with a
    warning, since the asymmetric labeling would be numerically meaningless
    there.
    """
    top, sym_pair = _class_of_triple(i1, i2, i3, tol.rel)
    if top is TopClass.SPHERICAL:
        warnings.warn("momenta nearly spherical; using the spherical closed form")
        return spherical_spectrum(i1, bundle, k, hbar0, j_max)
    if top is TopClass.SYMMETRIC:
        warnings.warn("two momenta nearly coincide; using the symmetric closed form")
        return symmetric_spectrum(sym_pair[0], sym_pair[1], bundle, k, hbar0, j_max)
    spec = diagonalized_spectrum(i1, i2, i3, bundle, k, hbar0, j_max, tol)
    return replace(spec, kind="asymmetric")


# --- classical momentum map ---------------------------------------------------


def classical_momentum_map(omega, config: RigidConfiguration, velocities, hbar0=1):
    """Momentum map J(omega) of the rotational SO(3) action on a rigid
    velocity list: the rescaled metric pairing of the generator field with
    the velocity,

        J(omega) = (1 / hbar0) sum_i m_i (omega x r_i) . v_i,

    i.e. the classical angular momentum about the center of mass contracted
    with omega.
    """
    omega = np.asarray(omega, dtype=float)
    v = np.asarray(velocities, dtype=float)
    gen = np.cross(omega, config.relatives)
    return float(np.einsum("i,ij,ij->", config.masses, gen, v)) / float(hbar0)
