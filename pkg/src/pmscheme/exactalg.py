"""Exact linear algebra over the rationals and integer polynomial roots.

Small dense systems only (dimension <= number of partitions of n, so a few
dozen); everything uses Fraction / int arithmetic, no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import FitInconsistent, FitUnderdetermined

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [row[:] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_unique(a: Matrix, b: Vector) -> Vector:
    """Solve a x = b, demanding a unique exact solution.

    Raises FitInconsistent when no solution exists and FitUnderdetermined when
    more than one does.
    """
    ncols = len(a[0]) if a else 0
    aug = [row + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            raise FitInconsistent("no exact solution reproduces the data")
    if ncols in pivots:
        raise FitInconsistent("no exact solution reproduces the data")
    if len(pivots) < ncols:
        raise FitUnderdetermined(
            f"system determines only {len(pivots)} of {ncols} unknowns"
        )
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return x


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the right kernel of a (rows may be rationals)."""
    if not a:
        return []
    ncols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def charpoly(mat: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    Returns coefficients ascending in degree; the leading coefficient is 1.
    All intermediate divisions are exact over the integers.
    """
    d = len(mat)
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    m = [row[:] for row in mat]
    c = 0
    for k in range(1, d + 1):
        if k > 1:
            for i in range(d):
                m[i][i] += c
            m = _mat_mul(mat, m)
        tr = sum(m[i][i] for i in range(d))
        assert tr % k == 0
        c = -tr // k
        coeffs[d - k] = c
    return coeffs


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    d = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def poly_eval(coeffs: list[int], x: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _poly_derivative(coeffs: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _poly_divmod_q(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(x != 0 for x in num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        f = num[-1] / den[-1]
        shift = len(num) - len(den)
        q[shift] = f
        for i, dc in enumerate(den):
            num[shift + i] -= f * dc
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _poly_gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while b and any(x != 0 for x in b):
        _, r = _poly_divmod_q(a, b)
        a, b = b, r
    lead = a[-1]
    return [x / lead for x in a]


def squarefree_part(coeffs: list[int]) -> list[int]:
    """p / gcd(p, p') for a monic integer polynomial; result is monic integer."""
    fr = [Fraction(c) for c in coeffs]
    dr = [Fraction(c) for c in _poly_derivative(coeffs)]
    g = _poly_gcd_q(fr, dr)
    q, rem = _poly_divmod_q(fr, g)
    assert not rem
    den_lcm = 1
    for x in q:
        den_lcm = den_lcm * x.denominator // gcd(den_lcm, x.denominator)
    assert den_lcm == 1, "monic rational divisor of a monic integer poly is integral"
    return [int(x) for x in q]


def distinct_integer_roots(coeffs: list[int], bound: int) -> list[int] | None:
    """All roots of a monic integer polynomial, if it splits into distinct
    integer roots with |root| <= bound; None otherwise.

    Candidates are pre-filtered by divisibility of the constant term of the
    squarefree part, so the scan over [-bound, bound] is a cheap mod per value.
    """
    deg = len(coeffs) - 1
    sf = squarefree_part(coeffs)
    if len(sf) - 1 != deg:
        return None  # repeated eigenvalue; caller retries
    roots = []
    work = sf
    if work[0] == 0:
        roots.append(0)
        work = work[1:]
        assert work[0] != 0  # squarefree, so x divides at most once
    const = work[0]
    for r in range(-bound, bound + 1):
        if r == 0 or const % r != 0:
            continue
        if poly_eval(work, r) == 0:
            roots.append(r)
    if len(roots) != deg:
        return None
    roots.sort()
    return roots
