"""Exact linear algebra over the Gaussian rationals.

Plain Gauss-Jordan elimination; matrices here are small (block sizes are
2j + 1 <= 26), so clarity beats asymptotics.  Matrices are lists of lists
of QC.
"""

from __future__ import annotations

from fractions import Fraction

from .gaussian import QC

Matrix = "list[list[QC]]"


def mat_zero(n: int, m: int):
    return [[QC(0) for _ in range(m)] for _ in range(n)]


def mat_identity(n: int):
    out = mat_zero(n, n)
    for i in range(n):
        out[i][i] = QC(1)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    s = QC.coerce(s)
    return [[x * s for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = mat_zero(n, m)
    for i in range(n):
        ai = a[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            oi = out[i]
            for j in range(m):
                if bt[j]:
                    oi[j] = oi[j] + c * bt[j]
    return out


def mat_commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def nullspace(rows) -> list[list[QC]]:
    """Basis of the right null space of a matrix, by Gauss-Jordan.

    Returns vectors with a deterministic normalization: free variable set
    to 1, pivots solved exactly.
    """
    if not rows:
        return []
    n_rows, n_cols = len(rows), len(rows[0])
    m = [[QC.coerce(x) for x in row] for row in rows]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = QC(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_of_col[c] = r
        r += 1
        if r == n_rows:
            break
    free_cols = [c for c in range(n_cols) if c not in pivot_of_col]
    basis = []
    for fc in free_cols:
        v = [QC(0)] * n_cols
        v[fc] = QC(1)
        for c, pr in pivot_of_col.items():
            v[c] = -m[pr][fc]
        basis.append(v)
    return basis


def solve_exact(a_cols: list[list[QC]], b: list[QC]) -> list[QC] | None:
    """Solve sum_j x_j a_cols[j] = b exactly.

    a_cols are the columns (each a list of length n_rows).  Returns the
    coefficient list, or None if the system is inconsistent.  Assumes the
    columns are linearly independent (true for the bases built here).
    """
    n_rows = len(b)
    n_cols = len(a_cols)
    aug = [[a_cols[j][i] for j in range(n_cols)] + [QC.coerce(b[i])] for i in range(n_rows)]
    r = 0
    pivot_cols = []
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = QC(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
    # inconsistent if a zeroed row has nonzero rhs
    for i in range(r, n_rows):
        if aug[i][n_cols]:
            return None
    if len(pivot_cols) < n_cols:
        raise ValueError("columns are linearly dependent")
    x = [QC(0)] * n_cols
    for row, c in enumerate(pivot_cols):
        x[c] = aug[row][n_cols]
    return x


def charpoly(a) -> list[Fraction]:
    """Characteristic polynomial of a matrix with real-rational entries,
    by the Faddeev-LeVerrier recursion.

    Returns coefficients [c_0, ..., c_n] with
    p(t) = c_n t^n + ... + c_0 and c_n = 1.
    """
    n = len(a)
    for row in a:
        for x in row:
            if not QC.coerce(x).is_real:
                raise ValueError("charpoly expects a real-rational matrix")
    m = [[QC.coerce(x) for x in row] for row in a]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = mat_identity(n)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk)
        trace = sum((mk[i][i].re for i in range(n)), Fraction(0))
        ck = -trace / k
        coeffs[n - k] = ck
        for i in range(n):
            mk[i][i] = mk[i][i] + QC(ck)
    return coeffs


def _poly_eval(coeffs: list[Fraction], x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    # synthetic division by (t - root); exact, remainder must vanish
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = coeffs[n]
    for k in range(n - 1, -1, -1):
        out[k] = carry
        carry = coeffs[k] + root * carry
    if carry != 0:
        raise ValueError("not a root")
    return out


def rational_roots_from_candidates(coeffs: list[Fraction], candidates):
    """Extract exact rational roots of a monic rational polynomial, guided
    by float approximations of its roots (with multiplicity).

    Each candidate is rationalized by continued fractions and accepted only
    on exact substitution, then removed by exact deflation.  Returns
    (rational roots, residual factor, unmatched candidates).
    """
    work = list(coeffs)
    roots: list[Fraction] = []
    leftover: list[float] = []
    for f in candidates:
        f = float(f)
        accepted = None
        if len(work) > 1:
            for attempt in (Fraction(f).limit_denominator(10**12), Fraction(round(f))):
                if _poly_eval(work, attempt) == 0:
                    accepted = attempt
                    break
        if accepted is None:
            leftover.append(f)
        else:
            roots.append(accepted)
            work = _deflate(work, accepted)
    return roots, work, leftover


def rational_roots(coeffs: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Split a monic rational polynomial into its rational roots (with
    multiplicity) and the residual factor, locating candidates numerically.
    """
    import numpy as np

    approx = np.roots([float(c) for c in reversed(coeffs)])
    candidates = sorted(r.real for r in approx if abs(r.imag) <= 1e-7)
    roots, work, _ = rational_roots_from_candidates(coeffs, candidates)
    return roots, work
