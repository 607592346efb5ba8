"""Verb handlers: thin adapters from parsed arguments to library calls."""

import argparse
import json
import re
from pathlib import Path
from typing import Any, Awaitable, Callable, Dict, List, Optional, Tuple

import aiofiles
import structlog

from ..analysis import (
    SuperDatum,
    admissible_data,
    characters,
    find_datum,
    fingerprint,
    fingerprints_equal,
    grouplikes,
    is_pointed,
    is_semisimple,
    reduced_skew_dimension,
    skew_primitives,
    super_data,
)
from ..bosonize import bosonize, coinvariants, roundtrip_iso
from ..catalog import PATTERNS, build_named, list_names
from ..classify import Classifier, ClassificationReport, render_report
from ..config import Settings
from ..core import HopfSuperAlgebraData, verify_axioms
from ..duality import (
    HopfPairing,
    bosonization_duality,
    double_dual_check,
    dual,
    pairing_to_morphism,
    verify_hopf_pairing,
)
from ..errors import SchemaError, UnknownNameError
from ..scalars import CycRational
from ..storage import ReportArchive, dumps

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

OK, FAILED = 0, 1

_ALPHA_RE = re.compile(r"^(?:α|alpha|a)?(\d+)$")


class Context:
    """What every handler needs: settings, the archive and the session conductor."""

    def __init__(self, settings: Settings, conductor: Optional[int] = None) -> None:
        self.settings = settings
        self.conductor = conductor if conductor is not None else settings.scalars.conductor
        self.archive = ReportArchive(settings.storage.output_dir)

    def p(self, args: argparse.Namespace) -> int:
        value = getattr(args, "p", None)
        return value if value is not None else self.settings.classify.default_p

    async def load(self, source: str, p: int) -> HopfSuperAlgebraData:
        """A JSON document when source names a file, otherwise a catalog algebra."""
        path = Path(source)
        if source.endswith(".json") or path.is_file():
            h = await self.archive.load_algebra(path)
        else:
            h = build_named(source, p)
        logger.debug("source_loaded", source=source, algebra=h.name, dim=h.dim)
        if self.conductor is not None and self.conductor != h.conductor:
            h = h.with_conductor(self.conductor)
        return h

    async def emit_json(self, name: str, payload: Any, output: Optional[Path] = None) -> None:
        if output is None:
            print(json.dumps(payload, indent=2, ensure_ascii=False))
        else:
            print(await self.archive.save_json(name, payload, output))

    async def emit_algebra(self, h: HopfSuperAlgebraData, output: Optional[Path]) -> None:
        if output is None:
            print(dumps(h))
        else:
            print(await self.archive.save_algebra(h, output))


def parse_alpha(text: str) -> int:
    m = _ALPHA_RE.match(text.strip())
    if m is None:
        raise UnknownNameError(f"{text!r} is not a character index")
    return int(m.group(1))


def select_datum(h: HopfSuperAlgebraData, g: str, alpha: str) -> SuperDatum:
    """The super-datum (g, α_alpha) of h.

    Raises:
        UnknownNameError: If (g, α) is not a super-datum
    """
    return find_datum(super_data(h), g, parse_alpha(alpha))


async def cmd_catalog(args: argparse.Namespace, ctx: Context) -> int:
    if args.action == "list":
        for name in list_names():
            print(name)
        for pattern, text in PATTERNS.items():
            print(f"{pattern:<24} {text}")
        return OK
    h = build_named(args.name, ctx.p(args))
    if ctx.conductor is not None and ctx.conductor != h.conductor:
        h = h.with_conductor(ctx.conductor)
    await ctx.emit_algebra(h, args.output)
    return OK


async def cmd_verify(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    report = verify_axioms(h)
    for name, check in report.checks.items():
        line = f"{name:<18} {'ok' if check.passed else 'FAILED'}"
        if not check.passed:
            line += f"  at {', '.join(check.witness)}" + (f"  ({check.detail})" if check.detail else "")
        print(line)
    print(f"{h.name or args.source}: {'all axioms hold' if report.passed else 'axioms fail'}")
    return OK if report.passed else FAILED


async def cmd_grouplikes(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    gl = grouplikes(h)
    payload = {
        "algebra": h.name,
        "order": gl.order,
        "invariant_factors": list(gl.invariant_factors),
        "generators": [gl.labels[i] for i in gl.generators],
        "elements": [{"label": label, "exponents": list(e)} for label, e in zip(gl.labels, gl.exponents)],
    }
    await ctx.emit_json("grouplikes", payload)
    return OK


async def cmd_characters(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    chars = characters(h)
    payload = [
        {
            "index": i,
            "label": chi.label(),
            "counit": chi.is_counit(),
            "generator_values": {name: v.format() for name, v in chi.generator_values.items()},
        }
        for i, chi in enumerate(chars.characters)
    ]
    await ctx.emit_json("characters", payload)
    return OK


def _data_payload(data: List[SuperDatum]) -> List[Dict[str, Any]]:
    return [{"label": d.label(), **d.model_dump(mode="json")} for d in data]


async def cmd_admissible(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    await ctx.emit_json("admissible", _data_payload(admissible_data(h)))
    return OK


async def cmd_superdata(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    await ctx.emit_json("superdata", _data_payload(super_data(h)))
    return OK


async def cmd_skewprim(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    gl = grouplikes(h)
    gamma = gl.elements[gl.find_label(args.g)]
    space = skew_primitives(h, gamma, args.parity)
    payload = {
        "algebra": h.name,
        "g": args.g,
        "parity": args.parity,
        "dim": space.dim,
        "reduced_dim": reduced_skew_dimension(h, gamma, args.parity),
        "basis": [h.format_vec(v) for v in space.basis],
    }
    await ctx.emit_json("skewprim", payload)
    return OK


async def cmd_coinv(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    record = coinvariants(h, select_datum(h, args.g, args.alpha))
    await ctx.emit_algebra(record.result, args.output)
    return OK


async def cmd_roundtrip(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    d = select_datum(h, args.g, args.alpha)
    record = coinvariants(h, d)
    roundtrip_iso(h, d, record)
    print(f"{record.result.name} # kZ2 ≅ {h.name} (dim {record.result.dim} → {h.dim})")
    return OK


async def cmd_bosonize(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    await ctx.emit_algebra(bosonize(h).result, args.output)
    return OK


async def cmd_dual(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    if args.check:
        check = double_dual_check(h)
        if not check:
            print(f"H → H** fails {check.failed} at {check.witness}")
            return FAILED
    await ctx.emit_algebra(dual(h), args.output)
    return OK


async def _read_matrix(path: Path, left: HopfSuperAlgebraData, right: HopfSuperAlgebraData) -> HopfPairing:
    async with aiofiles.open(path, "r") as f:
        text = await f.read()
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} at line {e.lineno}") from e
    if not isinstance(entries, list):
        raise SchemaError("expected a list of [left, right, value] entries")
    matrix: Dict[Tuple[int, int], CycRational] = {}
    for r, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(x, str) for x in entry)):
            raise SchemaError("expected [left label, right label, scalar]", f"/{r}")
        try:
            matrix[(left.index(entry[0]), right.index(entry[1]))] = CycRational.parse(entry[2])
        except (KeyError, ValueError) as e:
            raise SchemaError(str(e), f"/{r}") from e
    return HopfPairing(left=left, right=right, matrix=matrix)


async def cmd_pair(args: argparse.Namespace, ctx: Context) -> int:
    p = ctx.p(args)
    left = await ctx.load(args.left, p)
    right = await ctx.load(args.right, p)
    pairing = await _read_matrix(args.matrix, left, right)
    status = verify_hopf_pairing(pairing)
    payload: Dict[str, Any] = {"left": left.name, "right": right.name, **status.model_dump()}
    if status.is_hopf:
        payload["isomorphism"] = pairing_to_morphism(pairing).isomorphism
    await ctx.emit_json("pairing", payload)
    return OK if status.is_hopf and status.nondegenerate else FAILED


async def cmd_bosondual(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    status = bosonization_duality(h).status
    assert status is not None
    await ctx.emit_json("bosondual", {"algebra": h.name, **status.model_dump()})
    return OK if status.is_hopf and status.nondegenerate else FAILED


async def cmd_fingerprint(args: argparse.Namespace, ctx: Context) -> int:
    p = ctx.p(args)
    h = await ctx.load(args.source, p)
    first = fingerprint(h)
    if args.other is None:
        await ctx.emit_json("fingerprint", first.model_dump(mode="json"))
        return OK
    other = await ctx.load(args.other, p)
    equal = fingerprints_equal(first, fingerprint(other))
    print(f"{h.name} vs {other.name}: {'equal' if equal else 'different (not isomorphic)'}")
    return OK


async def cmd_pointed(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    await ctx.emit_json("pointed", {"algebra": h.name, **is_pointed(h).model_dump()})
    return OK


async def cmd_semisimple(args: argparse.Namespace, ctx: Context) -> int:
    h = await ctx.load(args.source, ctx.p(args))
    await ctx.emit_json("semisimple", {"algebra": h.name, **is_semisimple(h).model_dump()})
    return OK


async def _save_report(ctx: Context, report: ClassificationReport, output: Optional[Path]) -> None:
    stem = f"classify_{report.table}" + (f"_p{report.p}" if report.p is not None else "")
    json_path = await ctx.archive.save_json(stem, report.model_dump(mode="json"), output)
    await ctx.archive.save_text(stem, render_report(report), json_path.with_suffix(".txt"))


async def cmd_classify(args: argparse.Namespace, ctx: Context) -> int:
    classifier = Classifier(ctx.settings)
    primes: List[Optional[int]]
    if args.table == "square" and args.p is None:
        primes = list(ctx.settings.classify.square_dim_primes)
    else:
        primes = [args.p]
    ok = True
    for p in primes:
        report = await classifier.run(args.table, p)
        print(render_report(report), end="")
        output = args.output
        if output is not None and len(primes) > 1:
            output = output.with_name(f"{output.stem}_p{report.p}{output.suffix}")
        await _save_report(ctx, report, output)
        ok = ok and report.ok
    return OK if ok else FAILED


HANDLERS: Dict[str, Callable[[argparse.Namespace, Context], Awaitable[int]]] = {
    "catalog": cmd_catalog,
    "verify": cmd_verify,
    "grouplikes": cmd_grouplikes,
    "characters": cmd_characters,
    "admissible": cmd_admissible,
    "superdata": cmd_superdata,
    "skewprim": cmd_skewprim,
    "coinv": cmd_coinv,
    "roundtrip": cmd_roundtrip,
    "bosonize": cmd_bosonize,
    "dual": cmd_dual,
    "pair": cmd_pair,
    "bosondual": cmd_bosondual,
    "fingerprint": cmd_fingerprint,
    "pointed": cmd_pointed,
    "semisimple": cmd_semisimple,
    "classify": cmd_classify,
}
