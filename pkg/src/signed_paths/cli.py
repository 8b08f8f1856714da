"""Command-line entry point.

Exit codes: 0 success, 1 negative decision (not cospectral, not
switching isomorphic, certificate rejected), 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import enumeration
from .dscheck import (
    CatalogTooSmall,
    DsStatus,
    MalformedCertificate,
    MateCertificate,
    ds_status,
    verify_certificate,
)
from .enumeration import Catalog, brute_force_oracle, enumerate_catalog
from .families import make, parse_family
from .sgraph import GraphError, SignedGraph, are_switching_isomorphic, dumps_sg, read_sg
from .spectra import charpoly, det_adj, det_prime, eigenvalues, walk_sum

DET_PRIME_NOTE = (
    "det' is the signed product of the nonzero eigenvalues, (-1)^(n-1) * a_1; "
    "the bare coefficient a_1 differs in sign when n - 1 is odd"
)


class UsageError(Exception):
    pass


def load_graph(arg: str) -> SignedGraph:
    """A ``.sg`` file path or a family string such as ``P:7`` or ``H:1:4``."""
    p = Path(arg)
    if arg.endswith(".sg") or p.is_file():
        try:
            return read_sg(p)
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}") from None
    return make(parse_family(arg))


def catalog_cache_path(max_order: int, directory: Path | None = None) -> Path:
    # the hash covers the generator source, so a changed generator never reuses a stale file
    h = hashlib.sha256()
    h.update(f"{enumeration.CATALOG_FORMAT_VERSION}:{max_order}:".encode())
    h.update(Path(enumeration.__file__).read_bytes())
    return (directory or Path.cwd()) / f"signed-paths-catalog-{max_order}-{h.hexdigest()[:16]}.json"


def obtain_catalog(max_order: int, catalog_file: str | None, threads: int) -> Catalog:
    if catalog_file:
        try:
            return Catalog.load(catalog_file)
        except OSError as exc:
            raise UsageError(f"cannot read catalog {catalog_file}: {exc.strerror}") from None
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad catalog file {catalog_file}: {exc}") from None
    path = catalog_cache_path(max_order)
    if path.is_file():
        try:
            return Catalog.load(path)
        except (ValueError, KeyError):
            pass
    cat = enumerate_catalog(max_order, threads=threads)
    try:
        cat.save(path)
    except OSError:
        pass
    return cat


def _emit(out: TextIO, fmt: str, text: str, data) -> None:
    if fmt == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_spectrum(args, out) -> int:
    g = load_graph(args.graph)
    spec = eigenvalues(g, args.tol)
    _emit(out, args.format, "\n".join(f"{v:.12f}" for v in spec.values),
          {"eigenvalues": list(spec.values), "tol": spec.tol})
    return 0


def cmd_charpoly(args, out) -> int:
    cp = charpoly(load_graph(args.graph))
    _emit(out, args.format, str(cp), {"charpoly": list(cp.coeffs)})
    return 0


def cmd_walks(args, out) -> int:
    if args.k < 0:
        raise UsageError("walk length must be nonnegative")
    w = walk_sum(load_graph(args.graph), args.k)
    _emit(out, args.format, str(w.value), {"k": w.k, "walks": w.value})
    return 0


def cmd_det(args, out) -> int:
    g = load_graph(args.graph)
    d, dp = det_adj(g), det_prime(g)
    _emit(out, args.format, f"det  {d}\ndet' {dp}\nnote: {DET_PRIME_NOTE}",
          {"det": d, "det_prime": dp, "note": DET_PRIME_NOTE})
    return 0


def cmd_cospectral(args, out) -> int:
    same = charpoly(load_graph(args.g)) == charpoly(load_graph(args.h))
    _emit(out, args.format, "true" if same else "false", {"cospectral": same})
    return 0 if same else 1


def cmd_switchiso(args, out) -> int:
    g, h = load_graph(args.g), load_graph(args.h)
    w = are_switching_isomorphic(g, h)
    if w is None:
        _emit(out, args.format, "false", {"switching_isomorphic": False})
        return 1
    perm, xs = list(w.permutation), sorted(w.switch_set)
    text = "true\npermutation " + " ".join(map(str, perm)) + "\nswitch " + " ".join(map(str, xs))
    _emit(out, args.format, text,
          {"switching_isomorphic": True, "permutation": perm, "switch_set": xs})
    return 0


def cmd_enumerate(args, out) -> int:
    if args.max_order < 1:
        raise UsageError("--max-order must be at least 1")
    if args.oracle:
        try:
            cat = brute_force_oracle(args.max_order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        cat = enumerate_catalog(args.max_order, threads=args.threads)
    cat.save(args.out)
    counts = {o: len(cat.by_order(o)) for o in range(1, cat.max_order + 1)}
    text = "\n".join(f"order {o}: {c}" for o, c in counts.items()) + f"\ntotal {len(cat)}"
    _emit(out, args.format, text, {"max_order": cat.max_order, "counts": counts, "total": len(cat)})
    return 0


def _cert_text(c: MateCertificate) -> str:
    parts = [f"components {len(c.components)}: " + " + ".join(f"{g.n}v/{g.m}e" for g in c.components)]
    parts += [dumps_sg(g).rstrip("\n") for g in c.components]
    return "\n".join(parts)


def _verdict(args, n: int):
    if n < 1:
        raise UsageError("n must be positive")
    cat = obtain_catalog(max(n - 1, 1), args.catalog, args.threads)
    try:
        return ds_status(n, cat, threads=args.threads)
    except CatalogTooSmall as exc:
        raise UsageError(str(exc)) from None


def cmd_dscheck(args, out) -> int:
    v = _verdict(args, args.n)
    text = f"P_{v.n}: {v.status.value}, {len(v.mates)} mate(s)"
    if v.mates:
        text += "\n" + "\n".join(_cert_text(c) for c in v.mates)
    _emit(out, args.format, text, {
        "n": v.n, "status": v.status.value,
        "mates": [c.to_dict() for c in v.mates],
        "catalog_max_order_used": v.catalog_max_order_used,
    })
    return 0


def cmd_mate(args, out) -> int:
    v = _verdict(args, args.n)
    outdir = Path(args.out_dir)
    written = []
    if v.mates:
        outdir.mkdir(parents=True, exist_ok=True)
    for i, cert in enumerate(v.mates, 1):
        p = outdir / f"mate-P{v.n}-{i}.json"
        p.write_text(cert.to_json() + "\n")
        written.append(str(p))
    if args.format == "json":
        out.write(json.dumps({"n": v.n, "mates": [c.to_dict() for c in v.mates], "files": written}) + "\n")
    else:
        out.write(f"P_{v.n}: {len(v.mates)} mate(s)\n")
        for cert, p in zip(v.mates, written):
            out.write(f"{p}\n{_cert_text(cert)}\n")
    return 0 if v.status is DsStatus.NOT_DETERMINED else 1


def cmd_verify(args, out) -> int:
    try:
        cert = MateCertificate.load(args.certificate)
    except OSError as exc:
        raise UsageError(f"cannot read {args.certificate}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.certificate} is not JSON: {exc}") from None
    ok = verify_certificate(cert)
    _emit(out, args.format, "verified" if ok else "rejected", {"n": cert.n, "verified": ok})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="cap on worker processes")

    p = argparse.ArgumentParser(prog="signed-paths", parents=[common],
                                description="Exact spectral tools for signed graphs and paths.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("spectrum", parents=[common], help="approximate eigenvalues")
    s.add_argument("graph")
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    s.add_argument("graph")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("walks", parents=[common], help="signed closed walks of length k")
    s.add_argument("graph")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_walks)

    s = sub.add_parser("det", parents=[common], help="det and det'")
    s.add_argument("graph")
    s.set_defaults(func=cmd_det)

    for verb, func in (("cospectral", cmd_cospectral), ("switchiso", cmd_switchiso)):
        s = sub.add_parser(verb, parents=[common])
        s.add_argument("g")
        s.add_argument("h")
        s.set_defaults(func=func)

    s = sub.add_parser("enumerate", parents=[common], help="build a catalog file")
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="use the brute-force oracle (order <= 7)")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("dscheck", parents=[common], help="is P_n determined by its spectrum")
    s.add_argument("n", type=int)
    s.add_argument("--catalog")
    s.set_defaults(func=cmd_dscheck)

    s = sub.add_parser("mate", parents=[common], help="write one certificate file per mate of P_n")
    s.add_argument("n", type=int)
    s.add_argument("--catalog")
    s.add_argument("--out-dir", default=".")
    s.set_defaults(func=cmd_mate)

    s = sub.add_parser("verify", parents=[common], help="check a certificate file")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.format = getattr(args, "format", "text")
    args.threads = getattr(args, "threads", 1)
    if args.threads < 1:
        err.write("error: --threads must be at least 1\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, GraphError, MalformedCertificate) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
