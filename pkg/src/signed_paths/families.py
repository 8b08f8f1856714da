"""Named signed-graph families and their closed-form spectra.

Vertex labelings used by :func:`make`:

* ``P:n``   path ``0-1-...-(n-1)``.
* ``C:n``, ``C-:n``  cycle ``0-1-...-(n-1)-0``; the unbalanced one has the
  edge ``(n-2, n-1)`` negative.
* ``D:m``   center 0 joined to 1, 2, 3; then the path ``3-4-...-(m-1)``.
* ``E6/E7/E8``  center 0 with arms of lengths (1, 2, k-4): vertex 1; then
  ``0-2-3``; then ``0-4-5-...``.
* ``H:t``   unbalanced 4-cycle ``0-1-2-3-0`` (edge ``(2, 3)`` negative) with a
  path of ``t`` vertices ``4..t+3`` hanging from vertex 0.
* ``H:t:s`` the same 4-cycle with a ``t``-vertex tail at 0 and an
  ``s``-vertex tail (``s = t + m``) at the opposite vertex 2.
* ``mate:k`` the two-component mate of ``P:4k+3``.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .sgraph import GraphError, SignedGraph, disjoint_union, from_edge_list


class Kind(enum.Enum):
    PATH = "Path"
    BALANCED_CYCLE = "BalancedCycle"
    UNBALANCED_CYCLE = "UnbalancedCycle"
    STAR = "Star"
    DGRAPH = "Dgraph"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    H = "H"
    HPAIR = "Hpair"
    MATE = "MateFamily"


@dataclass(frozen=True)
class FamilySpec:
    """A family member: ``params`` is ``(n,)``, ``(t,)``, ``(t, m)`` or ``(k,)``.

    ``Star`` takes the number of leaves; the E-trees take no parameter.
    """

    kind: Kind
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        k, p = self.kind, self.params
        prefix = {
            Kind.PATH: "P", Kind.BALANCED_CYCLE: "C", Kind.UNBALANCED_CYCLE: "C-",
            Kind.STAR: "S", Kind.DGRAPH: "D", Kind.H: "H", Kind.MATE: "mate",
        }
        if k in (Kind.E6, Kind.E7, Kind.E8):
            return k.value
        if k is Kind.HPAIR:
            return f"H:{p[0]}:{p[0] + p[1]}"
        return f"{prefix[k]}:{p[0]}"


def path(n: int) -> SignedGraph:
    return make(FamilySpec(Kind.PATH, (n,)))


def parse_family(text: str) -> FamilySpec:
    """Parse ``P:n``, ``C:n``, ``C-:n``, ``S:k``, ``D:m``, ``E6``..``E8``, ``H:t``, ``H:t:s``, ``mate:k``."""
    s = text.strip()
    if s in ("E6", "E7", "E8"):
        return FamilySpec(Kind(s))
    m = re.fullmatch(r"(P|C-|C|S|D|H|mate):(\d+)(?::(\d+))?", s)
    if not m:
        raise GraphError(f"unknown family string {text!r}")
    head, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if head != "H":
            raise GraphError(f"unknown family string {text!r}")
        s_len = int(b)
        if s_len < a:
            raise GraphError(f"H:t:s needs s >= t, got {text!r}")
        return FamilySpec(Kind.HPAIR, (a, s_len - a))
    kind = {"P": Kind.PATH, "C": Kind.BALANCED_CYCLE, "C-": Kind.UNBALANCED_CYCLE,
            "S": Kind.STAR, "D": Kind.DGRAPH, "H": Kind.H, "mate": Kind.MATE}[head]
    return FamilySpec(kind, (a,))


def _path_edges(vertices: list[int]) -> list[tuple[int, int, int]]:
    return [(vertices[i], vertices[i + 1], 1) for i in range(len(vertices) - 1)]


def _arms_tree(lengths: tuple[int, ...]) -> SignedGraph:
    edges = []
    nxt = 1
    for length in lengths:
        arm = [0] + list(range(nxt, nxt + length))
        edges += _path_edges(arm)
        nxt += length
    return from_edge_list(nxt, edges)


def _c4_with_tails(t: int, s: int) -> SignedGraph:
    """Unbalanced 4-cycle with a t-vertex tail at 0 and an s-vertex tail at 2."""
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, -1), (0, 3, 1)]
    tail_a = list(range(4, 4 + t))
    tail_b = list(range(4 + t, 4 + t + s))
    if t:
        edges += _path_edges([0] + tail_a)
    if s:
        edges += _path_edges([2] + tail_b)
    return from_edge_list(4 + t + s, edges)


def _need(cond: bool, spec: FamilySpec) -> None:
    if not cond:
        raise GraphError(f"parameters out of range for {spec.kind.value}{spec.params}")


def make(spec: FamilySpec) -> SignedGraph:
    k, p = spec.kind, spec.params
    if k in (Kind.E6, Kind.E7, Kind.E8):
        _need(not p, spec)
        return _arms_tree((1, 2, int(k.value[1]) - 4))
    _need(len(p) == (2 if k is Kind.HPAIR else 1), spec)
    if k is Kind.PATH:
        _need(p[0] >= 0, spec)
        return from_edge_list(p[0], _path_edges(list(range(p[0]))))
    if k in (Kind.BALANCED_CYCLE, Kind.UNBALANCED_CYCLE):
        n = p[0]
        _need(n >= 3, spec)
        edges = _path_edges(list(range(n))) + [(0, n - 1, 1)]
        if k is Kind.UNBALANCED_CYCLE:
            edges[n - 2] = (n - 2, n - 1, -1)
        return from_edge_list(n, edges)
    if k is Kind.STAR:
        _need(p[0] >= 0, spec)
        return from_edge_list(p[0] + 1, [(0, i, 1) for i in range(1, p[0] + 1)])
    if k is Kind.DGRAPH:
        _need(p[0] >= 5, spec)
        return _arms_tree((1, 1, p[0] - 3))
    if k is Kind.H:
        _need(p[0] >= 1, spec)
        return _c4_with_tails(p[0], 0)
    if k is Kind.HPAIR:
        t, m = p
        _need(t >= 1 and m >= 0, spec)
        return _c4_with_tails(t, t + m)
    if k is Kind.MATE:
        kk = p[0]
        _need(kk >= 1, spec)
        if kk == 1:
            return disjoint_union([make(FamilySpec(Kind.H, (2,))), path(1)])
        return disjoint_union([make(FamilySpec(Kind.HPAIR, (kk - 1, kk + 1))), path(kk)])
    raise GraphError(f"unsupported family {k}")


@dataclass(frozen=True)
class CosineSpectrum:
    """Exact eigenvalues ``2cos(a*pi/b)`` listed as ``(a, b)``, largest first."""

    entries: tuple[tuple[int, int], ...]

    def values(self) -> list[float]:
        return [2 * math.cos(a * math.pi / b) for a, b in self.entries]


def _cos_entry(a: int, b: int) -> tuple[int, int]:
    """Fold ``a`` into ``[0, b]`` without changing ``cos(a*pi/b)``."""
    a %= 2 * b
    if a > b:
        a = 2 * b - a
    return a, b


def _cosine_spectrum(pairs: list[tuple[int, int]]) -> CosineSpectrum:
    folded = [_cos_entry(a, b) for a, b in pairs]
    folded.sort(key=lambda e: (Fraction(e[0], e[1]), e[1]))
    return CosineSpectrum(tuple(folded))


def closed_spectrum(spec: FamilySpec) -> CosineSpectrum:
    k, p = spec.kind, spec.params
    if k is Kind.PATH:
        n = p[0]
        return _cosine_spectrum([(i, n + 1) for i in range(1, n + 1)])
    if k is Kind.BALANCED_CYCLE:
        n = p[0]
        return _cosine_spectrum([(2 * i, n) for i in range(n)])
    if k is Kind.UNBALANCED_CYCLE:
        n = p[0]
        return _cosine_spectrum([(2 * i + 1, n) for i in range(n)])
    if k is Kind.HPAIR:
        t, m = p
        kk = t + m + 2
        first = [(2 * i - 1, 2 * kk) for i in range(1, kk + 1)]
        second = [(2 * i - 1, 2 * t + 4) for i in range(1, t + 3)]
        return _cosine_spectrum(first + second)
    raise GraphError(f"no closed-form spectrum for {k.value}")


def path_walk_formula(n: int, k: int) -> int:
    """Closed-walk sums of the path for lengths 4 and 6."""
    if k == 4:
        if n < 2:
            raise ValueError("length-4 formula needs n >= 2")
        return 14 + 6 * (n - 4)
    if k == 6:
        if n < 2:
            raise ValueError("length-6 formula needs n >= 2")
        return 2 if n == 2 else 76 + 20 * (n - 6)
    raise ValueError("only k = 4 and k = 6 have closed forms")


def path_det_formulas(n: int) -> tuple[int | None, int | None]:
    """``(det, |det'|)`` of the path: det for even n, |det'| for odd n."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n % 2 == 0:
        return (-1) ** (n // 2), None
    return None, (n + 1) // 2
