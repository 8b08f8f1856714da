"""Catalog of connected signed graphs with simple spectrum inside (-2, 2).

Growth works on the *pool*: connected graphs, up to switching isomorphism,
that pass :func:`structural_filter` and have every eigenvalue strictly
inside (-2, 2).  Both conditions survive vertex deletion, so every pool
graph of order v+1 arises by attaching one vertex to a pool graph of order
v.  Simplicity of the spectrum does not survive deletion (H_1 is simple,
its 4-cycle is not), so it is applied only when selecting catalog entries.

A pool graph with adjacency ``A`` has ``M = 2I - A`` positive definite.
Attaching a vertex with signed neighbor vector ``b`` keeps that true iff
the Schur complement ``2 - b^T M^{-1} b`` is positive, i.e.
``2 det(M) - b^T adj(M) b > 0``; likewise for ``2I + A``.  That integer test
is the inner loop.
"""
from __future__ import annotations

import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Iterable

import numpy as np

from .sgraph import (
    SignedGraph,
    are_switching_isomorphic,
    canonical_form,
    from_edge_list,
    is_bipartite,
    is_connected,
    structural_filter,
)
from .spectra import (
    CharPoly,
    all_roots_strictly_inside,
    charpoly,
    det_bareiss,
    is_simple_spectrum,
)

log = logging.getLogger(__name__)

CATALOG_FORMAT_VERSION = 1
ORDER_SAFETY_BOUND = 10_000
ORACLE_MAX_ORDER = 7


class CatalogOverflow(RuntimeError):
    """An order produced more graphs than the safety bound allows."""


@dataclass(frozen=True)
class CatalogEntry:
    graph: SignedGraph
    key: bytes
    charpoly: CharPoly

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.m

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "key": self.key.hex(),
            "edges": [[u, v] for u, v, _ in self.graph.edges],
            "signs": [s for _, _, s in self.graph.edges],
            "charpoly": list(self.charpoly.coeffs),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CatalogEntry:
        g = from_edge_list(d["order"], [(u, v, s) for (u, v), s in zip(d["edges"], d["signs"])])
        return cls(g, bytes.fromhex(d["key"]), CharPoly(tuple(d["charpoly"])))


@dataclass
class Catalog:
    max_order: int
    entries: list[CatalogEntry] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.entries.sort(key=lambda e: (e.order, e.key))
        self._by_key = {e.key: e for e in self.entries}

    def by_order(self, order: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.order == order]

    def lookup(self, key: bytes) -> CatalogEntry | None:
        return self._by_key.get(key)

    def keys(self) -> set[bytes]:
        return set(self._by_key)

    def restrict(self, max_order: int) -> Catalog:
        return Catalog(min(max_order, self.max_order), [e for e in self.entries if e.order <= max_order])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> str:
        doc = {
            "version": CATALOG_FORMAT_VERSION,
            "max_order": self.max_order,
            "entries": [e.to_dict() for e in self.entries],
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> Catalog:
        doc = json.loads(text)
        if doc.get("version") != CATALOG_FORMAT_VERSION:
            raise ValueError(f"unsupported catalog format version {doc.get('version')!r}")
        return cls(doc["max_order"], [CatalogEntry.from_dict(d) for d in doc["entries"]])

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def load(cls, path: str | Path) -> Catalog:
        return cls.from_json(Path(path).read_text())


def catalog_member(g: SignedGraph) -> bool:
    """Exact membership test, independent of how ``g`` was produced."""
    if not is_connected(g) or not structural_filter(g).passed:
        return False
    cp = charpoly(g)
    return is_simple_spectrum(cp) and all_roots_strictly_inside(cp)


# -- pool growth -----------------------------------------------------------

@dataclass(frozen=True)
class _PoolGraph:
    graph: SignedGraph
    key: bytes
    det_minus: int   # det(2I - A)
    adj_minus: tuple[tuple[int, ...], ...]
    det_plus: int    # det(2I + A)
    adj_plus: tuple[tuple[int, ...], ...]


def _exact_adjugate(m: list[list[int]], det: int) -> tuple[tuple[int, ...], ...]:
    """adj(m) for nonsingular integer ``m``: float inverse rounded, then checked exactly."""
    n = len(m)
    approx = np.rint(np.linalg.inv(np.array(m, dtype=float)) * det)
    adj = [[int(x) for x in row] for row in approx]
    for i in range(n):
        for j in range(n):
            if sum(m[i][k] * adj[k][j] for k in range(n) if m[i][k]) != (det if i == j else 0):
                return _adjugate_fraction_free(m)
    return tuple(tuple(r) for r in adj)


def _adjugate_fraction_free(m: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    from fractions import Fraction

    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    det = det_bareiss(m)
    return tuple(tuple(int(x * det) for x in row[n:]) for row in aug)


def _pool_graph(g: SignedGraph, key: bytes) -> _PoolGraph:
    a = g.matrix()
    n = g.n
    mm = [[2 * (i == j) - a[i][j] for j in range(n)] for i in range(n)]
    mp = [[2 * (i == j) + a[i][j] for j in range(n)] for i in range(n)]
    dm, dp = det_bareiss(mm), det_bareiss(mp)
    return _PoolGraph(g, key, dm, _exact_adjugate(mm, dm), dp, _exact_adjugate(mp, dp))


def _bipartition(g: SignedGraph) -> list[int]:
    adj = g.adjacency()
    side = [-1] * g.n
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                stack.append(w)
    return side


def _quad(adj: tuple[tuple[int, ...], ...], verts: tuple[int, ...], signs: tuple[int, ...]) -> int:
    q = 0
    for i, u in enumerate(verts):
        q += adj[u][u]
        for j in range(i):
            q += 2 * signs[i] * signs[j] * adj[u][verts[j]]
    return q


def _children(parent: _PoolGraph) -> dict[bytes, SignedGraph]:
    """All pool graphs obtained by attaching one new vertex to ``parent``."""
    g = parent.graph
    n = g.n
    deg = g.degrees()
    side = _bipartition(g)
    out: dict[bytes, SignedGraph] = {}
    open_by_side = [[v for v in range(n) if deg[v] < 3 and side[v] == s] for s in (0, 1)]
    for group in open_by_side:
        for size in (1, 2, 3):
            for verts in itertools.combinations(group, size):
                for rest in itertools.product((1, -1), repeat=size - 1):
                    signs = (1,) + rest
                    if 2 * parent.det_minus - _quad(parent.adj_minus, verts, signs) <= 0:
                        continue
                    # the new column of 2I + A' is +b, of 2I - A' is -b; the
                    # quadratic form is the same either way
                    if 2 * parent.det_plus - _quad(parent.adj_plus, verts, signs) <= 0:
                        continue
                    child = SignedGraph(
                        n + 1,
                        tuple(sorted(g.edges + tuple((v, n, s) for v, s in zip(verts, signs)))),
                    )
                    if not structural_filter(child).passed:
                        continue
                    key, rep = canonical_form(child)
                    out.setdefault(key, rep)
    return out


def _expand(parents: list[_PoolGraph]) -> dict[bytes, SignedGraph]:
    merged: dict[bytes, SignedGraph] = {}
    for p in parents:
        for key, rep in _children(p).items():
            merged.setdefault(key, rep)
    return merged


def _pool_levels(max_order: int, threads: int = 1) -> Iterable[list[SignedGraph]]:
    """Yield the pool order by order, starting with order 1."""
    single = SignedGraph(1, ())
    level = [_pool_graph(single, canonical_form(single)[0])]
    yield [single]
    for order in range(2, max_order + 1):
        if threads > 1 and len(level) > 1:
            chunks = [level[i::threads] for i in range(threads)]
            with ProcessPoolExecutor(max_workers=threads) as ex:
                parts = list(ex.map(_expand, chunks))
            merged: dict[bytes, SignedGraph] = {}
            for part in parts:
                for key, rep in part.items():
                    merged.setdefault(key, rep)
        else:
            merged = _expand(level)
        if len(merged) > ORDER_SAFETY_BOUND:
            raise CatalogOverflow(f"order {order}: {len(merged)} pool graphs exceed {ORDER_SAFETY_BOUND}")
        keys = sorted(merged)
        log.info("order %d: %d pool graphs", order, len(keys))
        level = [_pool_graph(merged[k], k) for k in keys]
        yield [merged[k] for k in keys]


def enumerate_pool(max_order: int) -> dict[int, list[SignedGraph]]:
    """Connected graphs passing the structural filter with spectrum inside (-2, 2), by order."""
    return {i + 1: lvl for i, lvl in enumerate(_pool_levels(max_order))}


def enumerate_catalog(max_order: int, threads: int = 1) -> Catalog:
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    entries = []
    for level in _pool_levels(max_order, threads):
        for g in level:
            cp = charpoly(g)
            if not is_simple_spectrum(cp):
                continue
            if not all_roots_strictly_inside(cp):
                raise AssertionError(f"pool graph escaped (-2, 2): {g}")
            key, rep = canonical_form(g)
            entries.append(CatalogEntry(rep, key, cp))
    return Catalog(max_order, entries)


# -- brute-force oracle ----------------------------------------------------

def _positive_definite(m: list[list[int]]) -> bool:
    """All leading principal minors positive, via fraction-free elimination."""
    m = [list(r) for r in m]
    n = len(m)
    prev = 1
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return True


def _inside(a: list[list[int]]) -> bool:
    n = len(a)
    return _positive_definite([[2 * (i == j) - a[i][j] for j in range(n)] for i in range(n)]) and \
        _positive_definite([[2 * (i == j) + a[i][j] for j in range(n)] for i in range(n)])


class _BruteIso:
    """Switching isomorphism by trying every permutation and every switch set."""

    def __init__(self, n: int):
        self.n = n
        self.perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
        signs = np.array(list(itertools.product((1, -1), repeat=n)), dtype=np.int8).reshape(-1, n)
        self.switch = signs[:, :, None] * signs[:, None, :]

    def equivalent(self, a: np.ndarray, b: np.ndarray) -> bool:
        # a permuted by every perm: P[k] = a[p, p]
        pa = a[self.perms[:, :, None], self.perms[:, None, :]]
        same_support = np.all((pa != 0) == (b != 0), axis=(1, 2))
        for cand in pa[same_support]:
            if np.any(np.all(self.switch * b[None] == cand[None], axis=(1, 2))):
                return True
        return False


def brute_force_oracle(max_order: int) -> Catalog:
    """Independent catalog by labeled enumeration, for cross-checking.

    Vertex i is attached to a nonempty subset of ``0..i-1`` with every sign
    pattern (first sign fixed by switching vertex i alone).  Every connected
    graph has such a labeling, and by interlacing every prefix of a qualifying
    labeled graph has spectrum inside (-2, 2), so prefixes failing the exact
    positivity test are dropped.  Classes are merged by exhaustive
    permutation-and-switching comparison.
    """
    if max_order > ORACLE_MAX_ORDER:
        raise ValueError(f"brute-force oracle is limited to max_order <= {ORACLE_MAX_ORDER}")
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    reps: list[SignedGraph] = [SignedGraph(1, ())]
    level: list[list[list[int]]] = [[[0]]]
    for n in range(2, max_order + 1):
        nxt = []
        for a in level:
            for mask in range(1, 1 << (n - 1)):
                nbrs = [i for i in range(n - 1) if mask >> i & 1]
                for rest in itertools.product((1, -1), repeat=len(nbrs) - 1):
                    col = [0] * (n - 1)
                    for v, s in zip(nbrs, (1,) + rest):
                        col[v] = s
                    b = [row + [col[i]] for i, row in enumerate(a)] + [col + [0]]
                    if _inside(b):
                        nxt.append(b)
        level = nxt
        iso = _BruteIso(n)
        classes: dict[tuple, list[np.ndarray]] = {}
        for a in level:
            g = _from_matrix(a)
            cp = charpoly(a)
            if not is_simple_spectrum(cp):
                continue
            bucket = classes.setdefault((cp.coeffs, tuple(sorted(g.degrees()))), [])
            arr = np.array(a, dtype=np.int8)
            if not any(iso.equivalent(arr, r) for r in bucket):
                bucket.append(arr)
        for bucket in classes.values():
            reps.extend(_from_matrix(r.tolist()) for r in bucket)
        log.info("oracle order %d: %d labeled graphs", n, len(level))
    entries = []
    for g in reps:
        key, rep = canonical_form(g)
        entries.append(CatalogEntry(rep, key, charpoly(g)))
    return Catalog(max_order, entries)


def _from_matrix(a: list[list[int]]) -> SignedGraph:
    n = len(a)
    return from_edge_list(n, [(i, j, a[i][j]) for i in range(n) for j in range(i + 1, n) if a[i][j]])
