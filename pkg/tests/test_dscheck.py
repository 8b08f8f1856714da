import itertools
import json

import pytest

from signed_paths.dscheck import (
    CatalogTooSmall,
    DsStatus,
    MalformedCertificate,
    MateCertificate,
    ds_status,
    find_mates,
    verify_certificate,
)
from signed_paths.enumeration import brute_force_oracle, enumerate_catalog
from signed_paths.families import make, parse_family, path
from signed_paths.sgraph import canonical_key
from signed_paths.spectra import CharPoly, charpoly, is_cospectral, is_simple_spectrum


@pytest.fixture(scope="module")
def cat():
    return enumerate_catalog(16)


def fam(s):
    return make(parse_family(s))


def cert_of(n, graphs):
    prod = CharPoly((1,))
    for g in graphs:
        prod = prod * charpoly(g)
    return MateCertificate(n, list(graphs), prod)


def comp_keys(cert):
    return sorted(canonical_key(g) for g in cert.components)


def test_n8(cat):
    mates = find_mates(8, cat)
    assert len(mates) == 1
    sizes = sorted((g.n, g.m) for g in mates[0].components)
    assert sizes == [(2, 1), (6, 6)]


def test_n14(cat):
    mates = find_mates(14, cat)
    assert len(mates) == 2
    p2, p4 = canonical_key(path(2)), canonical_key(path(4))
    bigs = []
    for c in mates:
        keys = comp_keys(c)
        assert p2 in keys and p4 in keys and len(keys) == 3
        bigs.append(next(g for g in c.components if g.n == 8))
    assert is_cospectral(bigs[0], bigs[1])


def test_n12_and_n11(cat):
    assert find_mates(12, cat) == []
    mates = find_mates(11, cat)
    assert len(mates) >= 2
    want = sorted([canonical_key(fam("H:1:4")), canonical_key(path(2))])
    assert want in [comp_keys(c) for c in mates]


@pytest.mark.parametrize("n, status", [(3, DsStatus.DETERMINED), (9, DsStatus.DETERMINED),
                                       (13, DsStatus.NOT_DETERMINED), (16, DsStatus.DETERMINED)])
def test_status(cat, n, status):
    v = ds_status(n, cat)
    assert v.status is status
    assert (v.status is DsStatus.DETERMINED) == (not v.mates)
    assert all(c.verified for c in v.mates)


def test_catalog_too_small():
    with pytest.raises(CatalogTooSmall):
        find_mates(10, enumerate_catalog(6))


def test_certificate_invariants(cat):
    for n in range(2, 17):
        for c in find_mates(n, cat):
            assert sum(g.n for g in c.components) == n
            assert sum(g.m for g in c.components) == n - 1
            assert len(c.components) >= 2
            assert is_simple_spectrum(c.charpoly_product)
            if n % 2 == 0:
                assert len(c.components) <= 3


def test_verify_examples():
    assert verify_certificate(cert_of(7, [fam("H:2"), path(1)]))
    assert not verify_certificate(cert_of(7, [path(2), path(5)]))
    with pytest.raises(MalformedCertificate):
        verify_certificate(cert_of(7, [path(2), path(4)]))


def test_certificate_json_roundtrip(cat, tmp_path):
    for c in find_mates(11, cat):
        p = tmp_path / "c.json"
        p.write_text(c.to_json())
        back = MateCertificate.load(p)
        assert back.components == c.components
        assert back.charpoly_product == c.charpoly_product
        assert verify_certificate(back)
        assert list(json.loads(c.to_json())) == ["n", "components", "charpoly", "verified"]


@pytest.mark.parametrize("payload", [
    {"n": 3},
    {"n": 3, "components": [{"order": 2, "edges": [[0, 1]], "signs": []}], "charpoly": [1]},
    {"n": 3, "components": [{"order": 2, "edges": [[0, 5]], "signs": [1]}], "charpoly": [1]},
])
def test_malformed_json(payload):
    with pytest.raises(MalformedCertificate):
        MateCertificate.from_dict(payload)


def test_complete_against_oracle_components():
    oracle = brute_force_oracle(7)
    entries = list(oracle)
    for n in range(2, 9):
        target = charpoly(path(n))
        want = set()
        for c in range(2, n + 1):
            for combo in itertools.combinations_with_replacement(entries, c):
                if sum(e.order for e in combo) != n or sum(e.edge_count for e in combo) != n - 1:
                    continue
                prod = CharPoly((1,))
                for e in combo:
                    prod = prod * e.charpoly
                if prod == target:
                    want.add(tuple(sorted(e.key for e in combo)))
        got = {tuple(comp_keys(c)) for c in find_mates(n, oracle.restrict(n - 1))}
        assert got == want
