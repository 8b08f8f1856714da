"""Spectral determination of paths: cospectral mates and their certificates."""
from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import poly
from .enumeration import Catalog, CatalogEntry
from .families import path
from .sgraph import SignedGraph, disjoint_union, from_edge_list
from .spectra import CharPoly, charpoly


class CatalogTooSmall(ValueError):
    """The catalog does not reach the orders a mate search needs."""


class MalformedCertificate(ValueError):
    pass


@dataclass
class MateCertificate:
    n: int
    components: list[SignedGraph]
    charpoly_product: CharPoly
    verified: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": [
                {
                    "order": c.n,
                    "edges": [[u, v] for u, v, _ in c.edges],
                    "signs": [s for _, _, s in c.edges],
                }
                for c in self.components
            ],
            "charpoly": list(self.charpoly_product.coeffs),
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, d: dict) -> MateCertificate:
        try:
            comps = [
                from_edge_list(c["order"], [(u, v, s) for (u, v), s in zip(c["edges"], c["signs"])])
                for c in d["components"]
            ]
            for c in d["components"]:
                if len(c["edges"]) != len(c["signs"]):
                    raise MalformedCertificate("edge and sign lists differ in length")
            return cls(int(d["n"]), comps, CharPoly(tuple(d["charpoly"])), bool(d.get("verified", False)))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, MalformedCertificate):
                raise
            raise MalformedCertificate(str(exc)) from exc

    @classmethod
    def load(cls, path_: str | Path) -> MateCertificate:
        return cls.from_dict(json.loads(Path(path_).read_text()))


class DsStatus(enum.Enum):
    DETERMINED = "Determined"
    NOT_DETERMINED = "NotDetermined"


@dataclass
class DsVerdict:
    n: int
    status: DsStatus
    mates: list[MateCertificate] = field(default_factory=list)
    catalog_max_order_used: int = 0


def _search(target: list[int], pool: list[CatalogEntry], start: int, orders_left: int,
            edges_left: int, chosen: list[int], out: list[list[int]]) -> None:
    if orders_left == 0:
        if edges_left == 0 and target == [1] and len(chosen) >= 2:
            out.append(list(chosen))
        return
    for i in range(start, len(pool)):
        e = pool[i]
        if e.order > orders_left or e.edge_count > edges_left:
            continue
        q = poly.exact_quotient(target, list(e.charpoly.coeffs))
        if q is None:
            continue
        chosen.append(i)
        _search(q, pool, i + 1, orders_left - e.order, edges_left - e.edge_count, chosen, out)
        chosen.pop()


def _search_from(args):
    target, pool, first, n = args
    out: list[list[int]] = []
    e = pool[first]
    q = poly.exact_quotient(target, list(e.charpoly.coeffs))
    if q is not None and e.order <= n and e.edge_count <= n - 1:
        _search(q, pool, first + 1, n - e.order, n - 1 - e.edge_count, [first], out)
    return out


def find_mates(n: int, catalog: Catalog, threads: int = 1) -> list[MateCertificate]:
    """Every multiset of catalog graphs whose union is cospectral with P_n.

    Components are tried largest first and only when their characteristic
    polynomial divides what is left of ``charpoly(P_n)`` exactly.  A
    component may appear at most once: repeating one would square a factor
    of a polynomial with simple roots.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if catalog.max_order < n - 1:
        raise CatalogTooSmall(f"catalog reaches order {catalog.max_order}, P_{n} needs {n - 1}")
    target = list(charpoly(path(n)).coeffs)
    pool = sorted((e for e in catalog if e.order <= n - 1), key=lambda e: (-e.order, e.key))
    firsts = list(range(len(pool)))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_search_from, [(target, pool, i, n) for i in firsts]))
    else:
        parts = [_search_from((target, pool, i, n)) for i in firsts]
    found = [combo for part in parts for combo in part]
    certs = []
    for combo in found:
        comps = [pool[i] for i in combo]
        product = CharPoly((1,))
        for c in comps:
            product = product * c.charpoly
        certs.append((sorted(c.key for c in comps), MateCertificate(n, [c.graph for c in comps], product)))
    certs.sort(key=lambda kc: kc[0])
    return [c for _, c in certs]


def verify_certificate(cert: MateCertificate) -> bool:
    """Rebuild the union from its edge lists and compare with P_n from scratch."""
    if sum(c.n for c in cert.components) != cert.n:
        raise MalformedCertificate("component orders do not sum to n")
    union = disjoint_union(cert.components)
    # a wrong edge total cannot match P_n's spectrum; report it as a rejection
    ok = (
        len(cert.components) >= 2
        and union.m == cert.n - 1
        and charpoly(union) == charpoly(path(cert.n))
        and cert.charpoly_product == charpoly(path(cert.n))
    )
    cert.verified = ok
    return ok


def ds_status(n: int, catalog: Catalog, threads: int = 1) -> DsVerdict:
    mates = find_mates(n, catalog, threads)
    for cert in mates:
        if not verify_certificate(cert):
            raise AssertionError(f"search produced a certificate that fails verification for n={n}")
    status = DsStatus.NOT_DETERMINED if mates else DsStatus.DETERMINED
    return DsVerdict(n, status, mates, max(n - 1, 0))
