import pytest

from signed_paths.enumeration import (
    Catalog,
    CatalogOverflow,
    brute_force_oracle,
    catalog_member,
    enumerate_catalog,
    enumerate_pool,
)
from signed_paths.families import make, parse_family, path
from signed_paths.sgraph import canonical_key, is_connected, structural_filter
from signed_paths.spectra import all_roots_strictly_inside, charpoly, is_simple_spectrum


@pytest.fixture(scope="module")
def cat12():
    return enumerate_catalog(12)


def test_small_orders():
    cat = enumerate_catalog(5)
    assert [len(cat.by_order(o)) for o in range(1, 6)] == [1, 1, 1, 1, 3]
    keys = cat.keys()
    for text in ("P:5", "D:5", "H:1"):
        assert canonical_key(make(parse_family(text))) in keys


def test_counts_per_order(cat12):
    counts = [len(cat12.by_order(o)) for o in range(1, 13)]
    assert counts == [1, 1, 1, 1, 3, 4, 9, 7, 5, 3, 6, 2]


def test_entries_are_members(cat12):
    for e in cat12:
        g = e.graph
        assert is_connected(g)
        assert structural_filter(g).passed
        assert is_simple_spectrum(e.charpoly) and all_roots_strictly_inside(e.charpoly)
        assert e.charpoly == charpoly(g)
        assert canonical_key(g) == e.key
        assert catalog_member(g)
        assert max(g.degrees(), default=0) <= 3


def test_known_non_members():
    assert not catalog_member(make(parse_family("C-:4")))  # repeated eigenvalues
    assert not catalog_member(make(parse_family("C:6")))
    assert not catalog_member(make(parse_family("S:4")))
    assert catalog_member(path(9))
    assert catalog_member(make(parse_family("E8")))


def test_pool_contains_non_simple_graphs():
    pool = enumerate_pool(6)
    keys = {canonical_key(g) for gs in pool.values() for g in gs}
    assert canonical_key(make(parse_family("C-:4"))) in keys


@pytest.mark.parametrize("order", [4, 5, 6])
def test_oracle_agrees(order):
    assert brute_force_oracle(order).keys() == enumerate_catalog(order).keys()


def test_oracle_limit():
    with pytest.raises(ValueError):
        brute_force_oracle(8)


def test_catalog_json_roundtrip(cat12, tmp_path):
    p = tmp_path / "cat.json"
    cat12.save(p)
    back = Catalog.load(p)
    assert back.max_order == 12 and back.keys() == cat12.keys()
    assert [e.charpoly for e in back] == [e.charpoly for e in cat12]
    assert cat12.restrict(7).keys() == enumerate_catalog(7).keys()


def test_catalog_version_check():
    with pytest.raises(ValueError):
        Catalog.from_json('{"version": 99, "max_order": 1, "entries": []}')
