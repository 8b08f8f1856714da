"""Exact characteristic polynomials and spectral tests.

Every function that takes a graph also accepts a square symmetric integer
matrix (list of rows), so the machinery applies to raw matrices too.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import poly
from .sgraph import SignedGraph

Matrix = Sequence[Sequence[int]]
GraphOrMatrix = Union[SignedGraph, Matrix]

DEFAULT_TOL = 1e-10


def as_matrix(obj: GraphOrMatrix) -> list[list[int]]:
    if isinstance(obj, SignedGraph):
        return obj.matrix()
    rows = [list(r) for r in obj]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


@dataclass(frozen=True)
class CharPoly:
    """Monic ``det(xI - A)`` as integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: CharPoly) -> CharPoly:
        return CharPoly(tuple(poly.mul(list(self.coeffs), list(other.coeffs))))

    def divides(self, other: CharPoly) -> bool:
        return poly.exact_quotient(list(other.coeffs), list(self.coeffs)) is not None

    def quotient(self, other: CharPoly) -> CharPoly | None:
        q = poly.exact_quotient(list(self.coeffs), list(other.coeffs))
        return None if q is None else CharPoly(tuple(q))

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    def to_lines(self) -> str:
        return "\n".join(str(c) for c in self.coeffs) + "\n"

    @classmethod
    def parse(cls, text: str) -> CharPoly:
        """Read either serialization (JSON array or one coefficient per line)."""
        text = text.strip()
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [ln.strip() for ln in text.splitlines() if ln.strip()]
        return cls(tuple(int(v) for v in values))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else str(mag)
            if i >= 1:
                body += "x" if i == 1 else f"x^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def charpoly(obj: GraphOrMatrix) -> CharPoly:
    """Berkowitz's division-free algorithm over Python integers.

    Matrix-vector products only touch nonzero entries, so sparse graph
    matrices cost roughly O(n * edges) per step.
    """
    a = as_matrix(obj)
    n = len(a)
    if n == 0:
        return CharPoly((1,))
    nz = [[(j, x) for j, x in enumerate(row) if x] for row in a]
    vect = [1, -a[0][0]]  # high-to-low coefficients of the leading block
    for r in range(1, n):
        col = [a[i][r] for i in range(r)]
        row = a[r]
        t = [1, -a[r][r]]
        v = col
        for k in range(r):
            t.append(-sum(row[j] * v[j] for j in range(r) if v[j]))
            if k + 1 < r:
                v = [sum(x * v[j] for j, x in nz[i] if j < r) for i in range(r)]
        vect = [
            sum(t[i - j] * vect[j] for j in range(max(0, i - r - 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return CharPoly(tuple(reversed(vect)))


def det_bareiss(obj: GraphOrMatrix) -> int:
    """Exact determinant by fraction-free elimination, independent of :func:`charpoly`."""
    m = as_matrix(obj)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_adj(obj: GraphOrMatrix) -> int:
    """``det(A)``, read off the characteristic polynomial as ``(-1)^n a_0``."""
    cp = charpoly(obj)
    return (-1) ** cp.degree * cp.coeffs[0]


def det_prime(obj: GraphOrMatrix) -> int:
    """Sum of the ``(n-1)``-fold eigenvalue products, ``(-1)^(n-1) a_1``.

    With a simple eigenvalue 0 this is the product of the nonzero
    eigenvalues, signed as it truly is; it vanishes when 0 is a repeated
    eigenvalue.  The sign can differ from a bare ``a_1`` convention.
    """
    cp = charpoly(obj)
    n = cp.degree
    if n == 0:
        return 0
    return (-1) ** (n - 1) * cp.coeffs[1]


@dataclass(frozen=True)
class WalkSum:
    k: int
    value: int


def matrix_power_trace(a: list[list[int]], k: int) -> int:
    n = len(a)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = a
    e = k
    while e:
        if e & 1:
            result = _matmul(result, base)
        e >>= 1
        if e:
            base = _matmul(base, base)
    return sum(result[i][i] for i in range(n))


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    yt = list(zip(*y)) if n else []
    return [[sum(p * q for p, q in zip(row, col) if p) for col in yt] for row in x]


def walk_sum(obj: GraphOrMatrix, k: int) -> WalkSum:
    """Trace of ``A**k``: signed count of closed walks of length ``k``."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    return WalkSum(k, matrix_power_trace(as_matrix(obj), k))


def power_sums(cp: CharPoly, kmax: int) -> list[int]:
    """``[p_0, ..., p_kmax]`` with ``p_k = sum(lambda_i ** k)`` via Newton's identities."""
    n = cp.degree
    c = [cp.coeffs[n - j] if j <= n else 0 for j in range(kmax + 1)]
    p = [n]
    for k in range(1, kmax + 1):
        total = k * c[k]
        for i in range(1, k):
            total += c[i] * p[k - i]
        p.append(-total)
    return p


def is_cospectral(g: GraphOrMatrix, h: GraphOrMatrix) -> bool:
    return charpoly(g) == charpoly(h)


def _coeff_list(f: CharPoly | Sequence[int]) -> list[int]:
    return poly.trim(list(f.coeffs if isinstance(f, CharPoly) else f))


def is_simple_spectrum(f: CharPoly | Sequence[int]) -> bool:
    c = _coeff_list(f)
    if len(c) <= 2:
        return True
    return len(poly.poly_gcd(c, poly.derivative(c))) == 1


def _distinct_in(seq: list[list[int]], f: list[int], a: Fraction, b: Fraction, closed: bool) -> int:
    """Distinct roots of squarefree ``f`` in (a, b) or [a, b], by Sturm's theorem."""
    va = poly.sign_variations(seq, a.numerator, a.denominator)
    vb = poly.sign_variations(seq, b.numerator, b.denominator)
    count = va - vb  # roots in (a, b]
    fa = poly.sign_at(f, a.numerator, a.denominator)
    fb = poly.sign_at(f, b.numerator, b.denominator)
    if fb == 0:
        count -= 1
    if closed:
        count += (fa == 0) + (fb == 0)
    return count


def count_roots_in(
    f: CharPoly | Sequence[int],
    a: Fraction | int,
    b: Fraction | int,
    open: bool = True,
) -> int:
    """Real roots of ``f`` in the interval, counted with multiplicity.

    ``open=True`` counts ``(a, b)``; otherwise ``[a, b]``.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    c = _coeff_list(f)
    total = 0
    for mult, part in enumerate(poly.squarefree_decomposition(c), start=1):
        if len(part) <= 1:
            continue
        total += mult * _distinct_in(poly.sturm_sequence(part), part, a, b, not open)
    return total


def all_roots_strictly_inside(f: CharPoly | Sequence[int], a: Fraction | int = -2, b: Fraction | int = 2) -> bool:
    c = _coeff_list(f)
    return count_roots_in(c, a, b, open=True) == len(c) - 1


@dataclass(frozen=True)
class SpectrumApprox:
    values: tuple[float, ...]
    tol: float


def _isolate(f: list[int], tol: float) -> list[Fraction]:
    """Midpoints of intervals of width <= tol around each real root of squarefree f."""
    seq = poly.sturm_sequence(f)
    e = poly.cauchy_bound_log2(f)
    # dyadic endpoints num / 2**k
    roots: list[Fraction] = []

    def variations(num: int, k: int) -> int:
        return poly.sign_variations(seq, num, 1 << k)

    def refine(lo: int, hi: int, k: int) -> None:
        # exactly one root in (lo, hi) / 2**k, endpoints not roots
        slo = poly.sign_at(f, lo, 1 << k)
        while Fraction(hi - lo, 1 << k) > tol:
            lo, hi, k = 2 * lo, 2 * hi, k + 1
            mid = lo + (hi - lo) // 2
            sm = poly.sign_at(f, mid, 1 << k)
            if sm == 0:
                roots.append(Fraction(mid, 1 << k))
                return
            if sm == slo:
                lo = mid
            else:
                hi = mid
        roots.append(Fraction(lo + hi, 1 << (k + 1)))

    stack = [(-(1 << e), 1 << e, 0, variations(-(1 << e), 0) - variations(1 << e, 0))]
    while stack:
        lo, hi, k, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            refine(lo, hi, k)
            continue
        lo, hi, k = 2 * lo, 2 * hi, k + 1
        mid = lo + (hi - lo) // 2
        if poly.sign_at(f, mid, 1 << k) == 0:
            roots.append(Fraction(mid, 1 << k))
            # step off the exact root until the punctured neighborhood is root-free
            j = 1
            while True:
                k2 = k + j
                left, right = (mid << j) - 1, (mid << j) + 1
                if (poly.sign_at(f, left, 1 << k2) and poly.sign_at(f, right, 1 << k2)
                        and variations(left, k2) - variations(right, k2) == 1):
                    break
                j += 1
            lo2, hi2 = lo << j, hi << j
            stack.append((lo2, left, k2, variations(lo2, k2) - variations(left, k2)))
            stack.append((right, hi2, k2, variations(right, k2) - variations(hi2, k2)))
            continue
        vm = variations(mid, k)
        stack.append((lo, mid, k, variations(lo, k) - vm))
        stack.append((mid, hi, k, vm - variations(hi, k)))
    return roots


def real_roots(f: CharPoly | Sequence[int], tol: float = DEFAULT_TOL) -> list[float]:
    """All real roots with multiplicity, each within ``tol`` of the truth, ascending."""
    c = _coeff_list(f)
    out: list[Fraction] = []
    for mult, part in enumerate(poly.squarefree_decomposition(c), start=1):
        if len(part) <= 1:
            continue
        for r in _isolate(part, tol):
            out.extend([r] * mult)
    return sorted(float(r) for r in out)


def eigenvalues(obj: GraphOrMatrix, tol: float = DEFAULT_TOL) -> SpectrumApprox:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return SpectrumApprox(tuple(real_roots(charpoly(obj), tol)), tol)
