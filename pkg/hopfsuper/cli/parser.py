"""Argument parser for the hopfsuper command line."""

import argparse
from pathlib import Path

from sympy import isprime

TABLES = ("4", "8", "2p", "taft", "square")


def odd_prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if p == 2 or not isprime(p):
        raise argparse.ArgumentTypeError(f"{p} is not an odd prime")
    return p


def positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} is not positive")
    return n


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", help="Catalog name, or a JSON document written by `catalog build`")
    p.add_argument("--p", type=odd_prime, default=None, help="Odd prime for p-parameterised names")


def _output(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", type=Path, default=None, help="Write to this file instead of stdout")


def _datum(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", required=True, help="Group-like label, e.g. c^2d")
    p.add_argument("--alpha", required=True, help="Character index as listed by `characters`, e.g. 3 or α3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfsuper", description="Exact computations with Hopf superalgebras.")
    parser.add_argument("--config", type=Path, default=None, help="YAML settings file")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--conductor", type=positive_int, default=None, help="Work over Q(zeta_N) for this N")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    catalog = sub.add_parser("catalog", help="List or build catalog algebras")
    catalog_sub = catalog.add_subparsers(dest="action", required=True, metavar="action")
    catalog_sub.add_parser("list", help="Registered names and name patterns")
    build = catalog_sub.add_parser("build", help="Build a catalog algebra as a JSON document")
    build.add_argument("name")
    build.add_argument("--p", type=odd_prime, default=None)
    _output(build)

    verify = sub.add_parser("verify", help="Check every Hopf superalgebra axiom")
    _source(verify)

    for name, text in (
        ("grouplikes", "Group-like elements and their group"),
        ("characters", "Characters, indexed for --alpha"),
        ("admissible", "Admissible data (g, α)"),
        ("superdata", "Super-data (g, α)"),
        ("pointed", "Whether the algebra is pointed"),
        ("semisimple", "Whether the algebra is semisimple"),
        ("bosondual", "Verify the pairing between the bosonizations of H* and H"),
    ):
        _source(sub.add_parser(name, help=text))

    skewprim = sub.add_parser("skewprim", help="(g, 1)-skew primitives of a parity")
    _source(skewprim)
    skewprim.add_argument("--g", required=True, help="Group-like label")
    skewprim.add_argument("--parity", type=int, choices=(0, 1), default=1)

    coinv = sub.add_parser("coinv", help="Coinvariant Hopf superalgebra at a super-datum")
    _source(coinv)
    _datum(coinv)
    _output(coinv)

    roundtrip = sub.add_parser("roundtrip", help="Verify that bosonizing the coinvariants gives back the algebra")
    _source(roundtrip)
    _datum(roundtrip)

    bosonize = sub.add_parser("bosonize", help="Bosonization H#kZ2")
    _source(bosonize)
    _output(bosonize)

    dual = sub.add_parser("dual", help="Dual Hopf superalgebra")
    _source(dual)
    _output(dual)
    dual.add_argument("--check", action="store_true", help="Also verify H ≅ H**")

    pair = sub.add_parser("pair", help="Verify a Hopf pairing given by a matrix file")
    pair.add_argument("left")
    pair.add_argument("right")
    pair.add_argument("--p", type=odd_prime, default=None)
    pair.add_argument(
        "--matrix", type=Path, required=True, help='JSON list of [left label, right label, "scalar"] entries'
    )

    fingerprint = sub.add_parser("fingerprint", help="Isomorphism invariants; with a second source, compare")
    _source(fingerprint)
    fingerprint.add_argument("other", nargs="?", default=None, help="Second source to compare against")

    classify = sub.add_parser("classify", help="Reproduce a classification table")
    classify.add_argument("--table", required=True, choices=TABLES)
    classify.add_argument("--p", type=odd_prime, default=None)
    _output(classify)
    return parser
