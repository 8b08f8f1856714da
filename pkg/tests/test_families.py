import pytest

from signed_paths.families import (
    FamilySpec,
    Kind,
    closed_spectrum,
    make,
    parse_family,
    path_det_formulas,
    path_walk_formula,
)
from signed_paths.sgraph import GraphError, is_connected, structural_filter
from signed_paths.spectra import charpoly, det_adj, det_prime, eigenvalues, is_cospectral, walk_sum


@pytest.mark.parametrize("text, kind, params", [
    ("P:5", Kind.PATH, (5,)),
    ("C:6", Kind.BALANCED_CYCLE, (6,)),
    ("C-:4", Kind.UNBALANCED_CYCLE, (4,)),
    ("D:7", Kind.DGRAPH, (7,)),
    ("E7", Kind.E7, ()),
    ("H:3", Kind.H, (3,)),
    ("H:1:4", Kind.HPAIR, (1, 3)),
    ("mate:2", Kind.MATE, (2,)),
])
def test_parse(text, kind, params):
    spec = parse_family(text)
    assert spec == FamilySpec(kind, params)
    assert str(spec) == text


@pytest.mark.parametrize("text", ["Q:3", "P:", "H:4:2", "P:3:4", "E9", "P:-1"])
def test_parse_errors(text):
    with pytest.raises(GraphError):
        parse_family(text)


@pytest.mark.parametrize("text", ["C:2", "D:4", "H:0", "mate:0"])
def test_out_of_range(text):
    with pytest.raises(GraphError):
        make(parse_family(text))


def test_sizes():
    assert make(parse_family("E6")).n == 6
    assert make(parse_family("E8")).n == 8
    h = make(parse_family("H:2:5"))
    assert (h.n, h.m) == (11, 11)
    m = make(parse_family("mate:2"))
    assert (m.n, m.m) == (11, 10) and not is_connected(m)


def test_families_pass_filter():
    for text in ("P:9", "D:8", "E6", "E7", "E8", "H:5", "H:2:6", "C-:6"):
        assert structural_filter(make(parse_family(text))).passed


def _closed_error(spec):
    want = sorted(closed_spectrum(spec).values())
    got = eigenvalues(make(spec)).values
    return max(abs(a - b) for a, b in zip(want, got))


@pytest.mark.parametrize("kind, n", [(Kind.PATH, 12), (Kind.BALANCED_CYCLE, 9), (Kind.UNBALANCED_CYCLE, 10)])
def test_closed_spectrum(kind, n):
    assert _closed_error(FamilySpec(kind, (n,))) < 1e-9


def test_closed_spectrum_hpair():
    assert _closed_error(FamilySpec(Kind.HPAIR, (3, 2))) < 1e-9
    with pytest.raises(GraphError):
        closed_spectrum(FamilySpec(Kind.E6))


def test_mate_family_cospectral_with_path():
    for k in range(1, 8):
        assert is_cospectral(make(FamilySpec(Kind.MATE, (k,))), make(FamilySpec(Kind.PATH, (4 * k + 3,))))


def test_formulas():
    for n in range(3, 15):
        p = make(FamilySpec(Kind.PATH, (n,)))
        assert walk_sum(p, 4).value == path_walk_formula(n, 4)
        assert walk_sum(p, 6).value == path_walk_formula(n, 6)
        d, dp = path_det_formulas(n)
        if d is not None:
            assert det_adj(p) == d
        else:
            assert abs(det_prime(p)) == dp
    with pytest.raises(ValueError):
        path_walk_formula(5, 8)


def test_h_parity():
    for t in range(1, 5):
        g = make(FamilySpec(Kind.H, (t,)))
        assert det_adj(g) % 2 == 0 and det_prime(g) % 2 == 0
    assert charpoly(make(parse_family("H:1"))).coeffs == (0, 6, 0, -5, 0, 1)
