"""Harmonic polynomial spaces on R^4 = C^2 and on R^3.

H^{p,q} is the (p+q+1)-dimensional space of polynomials of bidegree (p, q)
in (z1, z2, zb1, zb2) annihilated by the flat R^4 Laplacian; restricted to
S^3 these are the building blocks of the degree-(p+q) eigenspaces.  The
basis is computed by exact null-space extraction, one element per weight
sector (the weight 2l = (a - b) - (c - d) is preserved by the Laplacian),
and is ordered by ascending l.  All coefficients are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .gaussian import QC
from .polynomial import Polynomial, laplacian_r3, laplacian_r4
from .rational_linalg import nullspace


def _normalize_integer(vec: list[QC]) -> list[QC]:
    """Scale a rational vector to integer entries with content 1 and a
    positive leading (first nonzero) entry."""
    fracs = [x.re for x in vec]
    denom = math.lcm(*(f.denominator for f in fracs if f != 0))
    ints = [f * denom for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v.numerator))
    lead = next(v for v in ints if v != 0)
    sign = 1 if lead > 0 else -1
    return [QC(Fraction(sign * v.numerator // g)) for v in ints]


def _sector_monomials(p: int, q: int, weight2: int) -> list[tuple[int, int, int, int]]:
    """Bidegree-(p, q) monomials with (a - b) - (c - d) = weight2,
    in descending lexicographic order."""
    out = []
    for a in range(p, -1, -1):
        b = p - a
        for c in range(q, -1, -1):
            d = q - c
            if (a - b) - (c - d) == weight2:
                out.append((a, b, c, d))
    return out


@dataclass(frozen=True)
class BidegreeSpace:
    """Ordered harmonic basis of bidegree (p, q); dimension p + q + 1.

    basis[k] spans the weight sector with l = l_values[k]; l runs from -j to
    j in integer steps, j = (p + q) / 2.
    """

    p: int
    q: int
    basis: tuple[Polynomial, ...]
    l_values: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def total_degree(self) -> int:
        return self.p + self.q

    @property
    def j(self) -> Fraction:
        return Fraction(self.p + self.q, 2)

    def monomials(self) -> list[tuple[int, int, int, int]]:
        """All bidegree-(p, q) monomials in a fixed order."""
        out = []
        for a in range(self.p, -1, -1):
            for c in range(self.q, -1, -1):
                out.append((a, self.p - a, c, self.q - c))
        return out

    def coordinates(self, poly: Polynomial) -> list[QC] | None:
        """Exact coordinates of a polynomial in the basis, or None if it
        lies outside the span.

        Exploits the weight grading: every monomial has a definite weight
        2l = (a - b) - (c - d) and each weight sector of the space is
        one-dimensional, so the coordinate on basis[k] is a proportionality
        ratio within that sector.
        """
        if poly.nvars != 4:
            return None
        sectors: dict[int, dict[tuple, QC]] = {}
        for exp, c in poly.terms.items():
            if (exp[0] + exp[1], exp[2] + exp[3]) != (self.p, self.q):
                return None
            sectors.setdefault((exp[0] - exp[1]) - (exp[2] - exp[3]), {})[exp] = c
        coords = [QC(0)] * self.dim
        offset = self.p + self.q  # index of l in the basis is l + j
        for weight2, terms in sectors.items():
            k2 = weight2 + offset
            if k2 % 2 or not 0 <= k2 // 2 < self.dim:
                return None
            k = k2 // 2
            ref = self.basis[k].terms
            exp0, c0 = next(iter(ref.items()))
            if exp0 not in terms:
                return None
            ratio = terms[exp0] / c0
            if len(terms) != len(ref) or any(
                terms.get(e, QC(0)) != c * ratio for e, c in ref.items()
            ):
                return None
            coords[k] = ratio
        return coords


@lru_cache(maxsize=None)
def harmonic_basis(p: int, q: int) -> BidegreeSpace:
    """Exact basis of H^{p,q}, one element per weight sector.

    Each sector's kernel of the Laplacian is one-dimensional, which gives
    the dimension count p + q + 1 for free and makes the ordering canonical.
    """
    if p < 0 or q < 0:
        raise ValueError("bidegree must be nonnegative")
    j2 = p + q  # 2j
    basis = []
    l_vals = []
    for two_l in range(-j2, j2 + 1, 2):
        monos = _sector_monomials(p, q, two_l)
        # rows of the Laplacian restricted to the sector
        target = _sector_monomials(p - 1, q - 1, two_l) if p >= 1 and q >= 1 else []
        t_index = {m: i for i, m in enumerate(target)}
        rows = [[QC(0)] * len(monos) for _ in target]
        for col, (a, b, c, d) in enumerate(monos):
            if a >= 1 and c >= 1:
                rows[t_index[(a - 1, b, c - 1, d)]][col] = QC(4 * a * c)
            if b >= 1 and d >= 1:
                rows[t_index[(a, b - 1, c, d - 1)]][col] = QC(4 * b * d)
        if target:
            kernel = nullspace(rows)
        else:
            kernel = [[QC(1) if i == k else QC(0) for i in range(len(monos))] for k in range(len(monos))]
        if len(kernel) != 1:
            raise AssertionError(
                f"sector (p={p}, q={q}, 2l={two_l}) kernel has dimension {len(kernel)}"
            )
        vec = _normalize_integer(kernel[0])
        poly = Polynomial(4, {m: c for m, c in zip(monos, vec) if c})
        basis.append(poly)
        l_vals.append(Fraction(two_l, 2))
    space = BidegreeSpace(p=p, q=q, basis=tuple(basis), l_values=tuple(l_vals))
    assert space.dim == p + q + 1
    for b in space.basis:
        assert not laplacian_r4(b), "basis element is not harmonic"
    return space


@dataclass(frozen=True)
class R3HarmonicSpace:
    """Harmonic homogeneous polynomials of one degree on R^3; dim 2*degree+1."""

    degree: int
    basis: tuple[Polynomial, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def harmonic_basis_r3(degree: int) -> R3HarmonicSpace:
    """Kernel of the R^3 Laplacian on degree-`degree` monomials."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    monos = [
        (i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    ]
    target = [
        (i, j, degree - 2 - i - j)
        for i in range(degree - 2, -1, -1)
        for j in range(degree - 2 - i, -1, -1)
    ]
    t_index = {m: i for i, m in enumerate(target)}
    rows = [[QC(0)] * len(monos) for _ in target]
    for col, (i, j, k) in enumerate(monos):
        if i >= 2:
            rows[t_index[(i - 2, j, k)]][col] += QC(i * (i - 1))
        if j >= 2:
            rows[t_index[(i, j - 2, k)]][col] += QC(j * (j - 1))
        if k >= 2:
            rows[t_index[(i, j, k - 2)]][col] += QC(k * (k - 1))
    if target:
        kernel = nullspace(rows)
    else:
        kernel = [[QC(1) if i == k else QC(0) for i in range(len(monos))] for k in range(len(monos))]
    basis = []
    for vec in kernel:
        vec = _normalize_integer(vec)
        basis.append(Polynomial(3, {m: c for m, c in zip(monos, vec) if c}))
    space = R3HarmonicSpace(degree=degree, basis=tuple(basis))
    assert space.dim == 2 * degree + 1, f"dim H_{degree} = {space.dim}"
    for b in space.basis:
        assert not laplacian_r3(b)
    return space
