"""Sparse multivariate polynomials with exact complex-rational coefficients.

The same class covers the two variable sets used in the package:

* (z1, z2, zb1, zb2) on R^4 = C^2, variable order fixed as written, where
  zb_i denotes the conjugate variable;
* (x, y, z) on R^3 for the collinear (degenerate) body.

Terms map exponent tuples to QC coefficients; zero coefficients are never
stored.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .gaussian import QC

R4_NAMES = ("z1", "z2", "zb1", "zb2")
R3_NAMES = ("x", "y", "z")


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, QC] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                c = QC.coerce(coeff)
                if not c:
                    continue
                if len(exp) != nvars or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent tuple {exp}")
                clean[tuple(exp)] = c
        self.terms = clean

    # --- constructors ---
    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: QC.coerce(value)})

    @staticmethod
    def monomial(nvars: int, exponents: Iterable[int], coeff=1) -> "Polynomial":
        return Polynomial(nvars, {tuple(exponents): QC.coerce(coeff)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        exp = [0] * nvars
        exp[index] = 1
        return Polynomial.monomial(nvars, exp)

    # --- ring operations ---
    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, QC(0)) + c
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms: dict[tuple, QC] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, QC(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> "Polynomial":
        f = QC.coerce(factor)
        return Polynomial(self.nvars, {e: c * f for e, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    # --- calculus ---
    def diff(self, var: int) -> "Polynomial":
        terms = {}
        for exp, c in self.terms.items():
            k = exp[var]
            if k == 0:
                continue
            new = list(exp)
            new[var] = k - 1
            terms[tuple(new)] = terms.get(tuple(new), QC(0)) + c * k
        return Polynomial(self.nvars, terms)

    def mul_var(self, var: int) -> "Polynomial":
        terms = {}
        for exp, c in self.terms.items():
            new = list(exp)
            new[var] = exp[var] + 1
            terms[tuple(new)] = c
        return Polynomial(self.nvars, terms)

    # --- structure queries ---
    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def bidegree(self) -> tuple[int, int] | None:
        """(p, q) if every term has holomorphic degree p and antiholomorphic
        degree q (4-variable polynomials only), else None."""
        if self.nvars != 4 or not self.terms:
            return None
        bis = {(e[0] + e[1], e[2] + e[3]) for e in self.terms}
        return bis.pop() if len(bis) == 1 else None

    def evaluate(self, point) -> complex:
        values = [complex(p) for p in point]
        out = 0j
        for exp, c in self.terms.items():
            term = c.to_complex()
            for v, e in zip(values, exp):
                term *= v**e
            out += term
        return out

    def __str__(self):
        return self.pretty()

    __repr__ = __str__

    def pretty(self, names: tuple[str, ...] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = R4_NAMES if self.nvars == 4 else R3_NAMES
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = [
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exp)
                if e > 0
            ]
            body = "*".join(factors)
            if not body:
                parts.append(f"{c!r}")
            elif c == QC(1):
                parts.append(body)
            elif c == QC(-1):
                parts.append(f"-{body}")
            else:
                parts.append(f"{c!r}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


# --- differential operators used throughout ---------------------------------


def laplacian_r4(poly: Polynomial) -> Polynomial:
    """Flat Laplacian on R^4 in complex coordinates:
    Delta = 4 (d_z1 d_zb1 + d_z2 d_zb2)."""
    if poly.nvars != 4:
        raise ValueError("laplacian_r4 needs a 4-variable polynomial")
    return (poly.diff(0).diff(2) + poly.diff(1).diff(3)) * 4


def laplacian_r3(poly: Polynomial) -> Polynomial:
    if poly.nvars != 3:
        raise ValueError("laplacian_r3 needs a 3-variable polynomial")
    out = Polynomial.zero(3)
    for i in range(3):
        out = out + poly.diff(i).diff(i)
    return out


def euler_r3(poly: Polynomial) -> Polynomial:
    """Radial (Euler) operator x d_x + y d_y + z d_z."""
    out = Polynomial.zero(3)
    for i in range(3):
        out = out + poly.diff(i).mul_var(i)
    return out


def sphere_laplacian_r3(poly: Polynomial, degree: int) -> Polynomial:
    """Laplace-Beltrami operator of the unit S^2 applied to the restriction
    of a homogeneous degree-`degree` polynomial, as a polynomial identity.

    Derivation: extend f|_{S^2} as f r^(-degree) (homogeneous of degree 0)
    and apply the flat R^3 Laplacian; multiplying the result by r^(degree+2)
    clears the radical and gives

        r^2 Delta f - 2 degree (x . grad f) + degree (degree - 1) f,

    which equals the surface Laplacian on r = 1.  For a harmonic f this
    reduces to -degree (degree + 1) f.
    """
    if poly.nvars != 3:
        raise ValueError("sphere_laplacian_r3 needs a 3-variable polynomial")
    if not poly.is_homogeneous():
        raise ValueError("polynomial must be homogeneous")
    r2 = (
        Polynomial.monomial(3, (2, 0, 0))
        + Polynomial.monomial(3, (0, 2, 0))
        + Polynomial.monomial(3, (0, 0, 2))
    )
    return r2 * laplacian_r3(poly) - 2 * degree * euler_r3(poly) + degree * (degree - 1) * poly


def antipodal_sign(poly: Polynomial) -> int:
    """Eigenvalue of z -> -z on a homogeneous polynomial: (-1)^degree."""
    if not poly.is_homogeneous():
        raise ValueError("antipodal parity needs a homogeneous polynomial")
    return -1 if poly.total_degree() % 2 else 1
