"""Exact spectral computations on signed graphs and spectral determination of paths."""
from .dscheck import DsStatus, DsVerdict, MateCertificate, ds_status, find_mates, verify_certificate
from .enumeration import Catalog, CatalogEntry, brute_force_oracle, enumerate_catalog
from .families import FamilySpec, Kind, closed_spectrum, make, parse_family, path
from .sgraph import (
    GraphError,
    SignedGraph,
    are_switching_isomorphic,
    canonical_key,
    from_edge_list,
    structural_filter,
    switch,
)
from .spectra import CharPoly, charpoly, det_adj, det_prime, eigenvalues, walk_sum

__all__ = [
    "Catalog", "CatalogEntry", "CharPoly", "DsStatus", "DsVerdict", "FamilySpec", "GraphError",
    "Kind", "MateCertificate", "SignedGraph", "are_switching_isomorphic", "brute_force_oracle",
    "canonical_key", "charpoly", "closed_spectrum", "det_adj", "det_prime", "ds_status",
    "eigenvalues", "enumerate_catalog", "find_mates", "from_edge_list", "make", "parse_family",
    "path", "structural_filter", "switch", "verify_certificate", "walk_sum",
]
