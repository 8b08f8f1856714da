"""Dense univariate polynomials over the integers.

A polynomial is a list of Python ints, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.  Everything here is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list[int]) -> int:
    return len(f) - 1


def add(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return trim(out)


def neg(f: list[int]) -> list[int]:
    return [-c for c in f]


def sub(f: list[int], g: list[int]) -> list[int]:
    return add(f, neg(g))


def mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def derivative(f: list[int]) -> list[int]:
    return trim([i * f[i] for i in range(1, len(f))])


def content(f: list[int]) -> int:
    c = 0
    for a in f:
        c = gcd(c, a)
    return c


def primitive(f: list[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    f = trim(f)
    if not f:
        return []
    c = content(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def divmod_exact(f: list[int], g: list[int]) -> tuple[list[int], list[int]] | None:
    """Quotient and remainder of ``f`` by ``g`` in Z[x].

    Returns ``None`` when some quotient coefficient is not an integer, which
    cannot happen for monic ``g``.
    """
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(f)
    dg, lc = len(g) - 1, g[-1]
    if len(r) <= dg:
        return [], r
    q = [0] * (len(r) - dg)
    while len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        c, rem = divmod(r[-1], lc)
        if rem:
            return None
        q[shift] = c
        for i, b in enumerate(g):
            r[i + shift] -= c * b
        r = trim(r)
    return q, r


def exact_quotient(f: list[int], g: list[int]) -> list[int] | None:
    """``f / g`` if ``g`` divides ``f`` in Z[x], else ``None``."""
    res = divmod_exact(f, g)
    if res is None or res[1]:
        return None
    return res[0]


def pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """``lc(g)**(deg f - deg g + 1) * f mod g``, computed without fractions."""
    g = trim(g)
    r = trim(f)
    dg, lc = len(g) - 1, g[-1]
    if len(r) - 1 < dg:
        return r
    for _ in range(len(r) - 1 - dg + 1):
        if len(r) - 1 < dg:
            r = [lc * a for a in r]
            continue
        shift = len(r) - 1 - dg
        top = r[-1]
        r = [lc * a for a in r]
        for i, b in enumerate(g):
            r[i + shift] -= top * b
        r = trim(r)
    return r


def poly_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient (primitive PRS).

    Contents are ignored: the result is defined up to a constant factor.
    """
    f, g = primitive(f), primitive(g)
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        f, g = g, primitive(pseudo_rem(f, g))
    return f if len(f) > 1 else [1]


def squarefree_decomposition(f: list[int]) -> list[list[int]]:
    """``[f1, f2, ...]`` with ``f = c * prod fi**i`` (each fi primitive).

    Built from the gcd chain ``g_i = gcd(g_{i-1}, g_{i-1}')``; a multiplicity
    with no roots comes back as ``[1]``.
    """
    f = primitive(f)
    if len(f) <= 1:
        return []
    chain = [f]
    while len(chain[-1]) > 1:
        g = chain[-1]
        chain.append(poly_gcd(g, derivative(g)))
    # h[i] = product of the distinct roots with multiplicity > i
    h = [_quotient_primitive(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    h.append([1])
    return [_quotient_primitive(h[i], h[i + 1]) for i in range(len(h) - 1)]


def _quotient_primitive(f: list[int], g: list[int]) -> list[int]:
    q = exact_quotient(f, g)
    if q is not None:
        return q
    # g divides f over Q; scale f so the division is exact over Z.
    lc = g[-1]
    scaled = [a * lc ** (len(f) - len(g) + 1) for a in f]
    q = exact_quotient(scaled, g)
    if q is None:
        raise ArithmeticError("divisor does not divide over Q")
    return primitive(q)


def sign_at(f: list[int], num: int, den: int = 1) -> int:
    """Sign of ``f(num/den)`` for ``den > 0``."""
    if not f:
        return 0
    acc = f[-1]
    qpow = 1
    for c in reversed(f[:-1]):
        qpow *= den
        acc = acc * num + c * qpow
    return (acc > 0) - (acc < 0)


def eval_fraction(f: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def sturm_sequence(f: list[int]) -> list[list[int]]:
    """Sturm chain of ``f`` with every member scaled by a positive constant."""
    f = trim(f)
    seq = [f, derivative(f)]
    while seq[-1]:
        a, b = seq[-2], seq[-1]
        r = pseudo_rem(a, b)
        if not r:
            break
        # prem = lc(b)^(da-db+1) * rem; the chain needs -rem up to a positive factor.
        k = len(a) - len(b) + 1
        if b[-1] > 0 or k % 2 == 0:
            r = neg(r)
        c = content(r)
        seq.append([x // c for x in r])
    if not seq[-1]:
        seq.pop()
    return seq


def sign_variations(seq: list[list[int]], num: int, den: int = 1) -> int:
    prev = 0
    count = 0
    for p in seq:
        s = sign_at(p, num, den)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def cauchy_bound_log2(f: list[int]) -> int:
    """An integer ``e`` with every real root of ``f`` inside ``(-2**e, 2**e)``."""
    lc = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    bound = 1 + -(-m // lc)
    return bound.bit_length() + 1
