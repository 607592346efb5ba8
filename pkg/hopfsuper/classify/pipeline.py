"""End-to-end classification of one table: super-data, orbits, coinvariants, matching and duality."""

import asyncio
from collections import Counter
from typing import Any, Callable, Dict, List, Literal, Mapping, Optional, Sequence, Tuple, TypeVar

import structlog
from pydantic import BaseModel, Field
from sympy import isprime

from ..analysis import (
    Fingerprint,
    SuperDatum,
    admissible_data,
    characters,
    fingerprint,
    fingerprints_equal,
    grouplikes,
    is_pointed,
    super_data,
)
from ..bosonize import CoinvariantRecord, bosonize, coinvariants, roundtrip_iso
from ..catalog import build_named, format_datum, rewriter_for
from ..catalog.families import TABLE_2P_LABELS, TABLE_ENTRIES, TableEntry, table_2p_entry, table_group
from ..config import Settings, load_settings
from ..core import HopfSuperAlgebraData, check_morphism, verify_axioms
from ..duality import (
    HopfPairing,
    bosonization_duality,
    dual,
    exterior_pairing,
    pairing_from_generators,
    pairing_to_morphism,
    search_pairing,
)
from ..errors import HopfSuperError, MorphismError, PresentationError, StructureError
from ..scalars import CycRational
from .automorphisms import AutomorphismSpec, extend_on_basis, generator_vectors, orbits, verify_automorphisms
from .match import match_presentation
from .tables import CandidateEntry, ClassEntry, ExpectedTables, PairingEntry, RowEntry, TableSpec, load_expected_tables

logger: structlog.stdlib.BoundLogger = structlog.get_logger()

T = TypeVar("T")

CandidateStatus = Literal["ok", "presentation_error", "probe", "error"]


class ClassReport(BaseModel):
    """One isomorphism class found as the coinvariants at a super-datum of a candidate."""

    label: str = Field(..., description="Label as written in the expected tables")
    name: str = Field(..., description="Catalog name of the built table entry")
    group: str = Field(..., description="Γ as a product of cyclic groups")
    datum: str = Field(default="", description="(Γ, D) data of the table entry")
    super_datum: str = ""
    orbit: Optional[int] = None
    matched: bool = False
    stage: Optional[str] = None
    expected_stage: str = "printed"
    assignment: Dict[str, str] = Field(default_factory=dict)
    witness: List[str] = Field(default_factory=list)
    fingerprint_matches: bool = False
    group_doubles: bool = Field(default=False, description="G of the bosonization has twice the order")
    fingerprint: Optional[Fingerprint] = None


class CandidateReport(BaseModel):
    name: str
    status: CandidateStatus = "ok"
    dim: Optional[int] = None
    admissible: List[str] = Field(default_factory=list)
    super_data: List[str] = Field(default_factory=list)
    orbits: List[List[str]] = Field(default_factory=list)
    automorphisms: List[AutomorphismSpec] = Field(default_factory=list)
    roundtrip: Dict[str, bool] = Field(
        default_factory=dict, description="Super-datum → half-dimensional coinvariants with a verified round trip"
    )
    orbit_fingerprints_agree: bool = True
    classes: List[ClassReport] = Field(default_factory=list)
    overlap: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    mismatches: List[str] = Field(default_factory=list)


class RowReport(BaseModel):
    """Duality and pointedness columns of one table row."""

    label: str
    name: str = ""
    dual: Optional[str] = None
    bosonization_duality: bool = False
    dual_pointed_expected: bool = True
    dual_pointed: Optional[bool] = None
    dual_fingerprint_matches: Optional[bool] = None
    pairing_method: Optional[str] = None
    pairing_source: Optional[Literal["printed", "searched", "swapped"]] = None
    pairing_ok: Optional[bool] = None
    pairing_witness: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    mismatches: List[str] = Field(default_factory=list)


class ErratumReport(BaseModel):
    key: str
    printed: str = ""
    corrected: str = ""
    note: str = ""
    known: bool = Field(..., description="Listed in the expected tables")
    evidence: List[str] = Field(default_factory=list)


class ClassificationReport(BaseModel):
    table: str
    title: str
    p: Optional[int] = None
    expected_classes: int
    found_classes: int
    classes: List[str] = Field(default_factory=list, description="Catalog names of the classes found")
    candidates: List[CandidateReport]
    rows: List[RowReport] = Field(default_factory=list)
    fingerprints_distinct: bool
    errata: List[ErratumReport] = Field(default_factory=list)
    mismatches: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def group_text(factors: Sequence[int]) -> str:
    return "×".join(f"C{n}" for n in factors) or "1"


def table_datum(label: str, p: int) -> str:
    """(Γ, D) of a table label, or "" for entries outside the printed tables."""
    entry: TableEntry
    if label in TABLE_ENTRIES:
        entry = TABLE_ENTRIES[label]
    elif label in TABLE_2P_LABELS:
        entry = table_2p_entry(label, p)
    else:
        return ""
    return format_datum(table_group(entry), entry[2])


def _expect(report: CandidateReport, what: str, found: int, expected: Optional[int]) -> None:
    if expected is not None and found != expected:
        report.mismatches.append(f"{what} has {found} elements, expected {expected}")


def _locate(h: HopfSuperAlgebraData, data: Sequence[SuperDatum], g: str, alpha: Mapping[str, CycRational]) -> int:
    """Position in data of the datum with group-like label g and character values alpha.

    Raises:
        StructureError: If g is not a group-like label of h
        LookupError: If no such character or super-datum exists
    """
    gi = grouplikes(h).find_label(g)
    chars = characters(h)
    chi = chars.find(alpha)
    if chi is None:
        raise LookupError(f"no character with values {dict((k, v.format()) for k, v in alpha.items())}")
    ai = chars.index_of(chi)
    for k, d in enumerate(data):
        if d.g_index == gi and d.alpha_index == ai:
            return k
    raise LookupError(f"({g}, {chi.label()}) is not a super-datum of {h.name}")


def _analyse_class(
    h: HopfSuperAlgebraData,
    data: Sequence[SuperDatum],
    records: Mapping[int, CoinvariantRecord],
    prints: Mapping[int, Fingerprint],
    orbit_of: Mapping[int, int],
    cls: ClassEntry,
    p: int,
) -> ClassReport:
    ref = cls.datum.resolved(p)
    target = build_named(cls.label, p)
    out = ClassReport(
        label=cls.label,
        name=target.name,
        group=group_text(grouplikes(target).invariant_factors),
        datum=table_datum(cls.label, p),
        expected_stage=cls.expected_stage,
    )
    try:
        k = _locate(h, data, ref.g, ref.alpha_values())
    except (LookupError, StructureError) as e:
        out.witness = [str(e)]
        return out
    out.super_datum = data[k].label()
    out.orbit = orbit_of[k]
    match = match_presentation(h, records[k], target, cls.assignment)
    out.matched, out.stage, out.assignment = match.ok, match.stage, match.assignment
    if not match.ok:
        out.witness = [str(match.printed_check.failed), *match.printed_check.witness]
        return out
    out.fingerprint = prints[k]
    out.fingerprint_matches = fingerprints_equal(prints[k], fingerprint(target))
    coinv = records[k].result
    out.group_doubles = grouplikes(bosonize(coinv).result).order == 2 * grouplikes(coinv).order
    return out


def _analyse(
    h: HopfSuperAlgebraData, entry: CandidateEntry, p: int, samples: Sequence[int], report: CandidateReport
) -> None:
    report.dim = h.dim
    ad = admissible_data(h)
    sd = super_data(h)
    report.admissible = [d.label() for d in ad]
    report.super_data = [d.label() for d in sd]
    _expect(report, "AD", len(ad), entry.ad)
    _expect(report, "SD", len(sd), entry.sd)

    autos = verify_automorphisms(h, entry.automorphisms, samples)
    report.automorphisms = autos
    for spec in autos:
        if spec.ok != spec.expected_ok:
            verdict = "verifies" if spec.ok else f"fails {spec.check.failed}"
            report.mismatches.append(f"automorphism {spec.name} {verdict}, expected the opposite")
    parts = orbits(h, sd, autos)
    report.orbits = [o.labels for o in parts]
    _expect(report, "SD/~", len(parts), entry.orbits)
    orbit_of = {k: i for i, o in enumerate(parts) for k in o.members}

    records: Dict[int, CoinvariantRecord] = {}
    prints: Dict[int, Fingerprint] = {}
    for k, d in enumerate(sd):
        record = coinvariants(h, d)
        ok = 2 * record.result.dim == h.dim
        try:
            roundtrip_iso(h, d, record)
        except MorphismError as e:
            ok = False
            logger.warning("roundtrip_failed", candidate=h.name, datum=d.label(), error=str(e))
        report.roundtrip[d.label()] = ok
        if not ok:
            report.mismatches.append(f"round trip fails at {d.label()}")
        records[k] = record
        prints[k] = fingerprint(record.result)
    for o in parts:
        first = prints[o.members[0]]
        if not all(fingerprints_equal(first, prints[k]) for k in o.members[1:]):
            report.orbit_fingerprints_agree = False
            report.mismatches.append(f"coinvariants over the orbit {o.labels} have different fingerprints")

    hits: Counter[int] = Counter()
    for cls in entry.classes:
        c = _analyse_class(h, sd, records, prints, orbit_of, cls, p)
        report.classes.append(c)
        if c.orbit is not None:
            hits[c.orbit] += 1
        if not c.matched:
            report.mismatches.append(f"{c.name} not matched at {c.super_datum or cls.datum.g}: {c.witness}")
        elif c.stage != c.expected_stage:
            report.mismatches.append(f"{c.name} matched at stage {c.stage}, expected {c.expected_stage}")
        elif not c.fingerprint_matches:
            report.mismatches.append(f"{c.name}: coinvariant fingerprint differs from the table entry")
        if c.matched and not c.group_doubles:
            report.mismatches.append(f"{c.name}: group-likes of the bosonization are not G × C2")
    if not entry.probe:
        for i, o in enumerate(parts):
            if hits[i] != 1:
                report.mismatches.append(f"orbit {o.labels} carries {hits[i]} table classes")


def analyse_candidate(entry: CandidateEntry, p: int, samples: Sequence[int] = (-1, 2)) -> CandidateReport:
    """Run the whole per-candidate program; failures are recorded on the report, never raised.

    Args:
        entry: Candidate with its expected counts, automorphisms and classes
        p: Prime for p-parameterised names
        samples: Parameter values for scalar-family automorphisms

    Returns:
        CandidateReport with every mismatch against the expectations
    """
    report = CandidateReport(name=entry.name, status="probe" if entry.probe else "ok")
    log = logger.bind(candidate=entry.name)
    try:
        h = build_named(entry.name, p)
    except PresentationError as e:
        report.status = "presentation_error"
        report.overlap = list(e.overlap or ())
        report.error = str(e)
        if not entry.presentation_error:
            report.mismatches.append(f"presentation is not confluent: {e}")
        log.info("presentation_overlap_failed", overlap=report.overlap)
        return report
    if entry.presentation_error:
        report.mismatches.append("presentation builds, expected a non-confluent overlap")
    try:
        _analyse(h, entry, p, samples, report)
    except HopfSuperError as e:
        report.status = "error"
        report.error = f"{type(e).__name__}: {e}"
        report.mismatches.append(report.error)
        log.error("candidate_failed", error=report.error)
    log.info(
        "candidate_analysed",
        status=report.status,
        sd=len(report.super_data),
        orbits=len(report.orbits),
        classes=sum(c.matched for c in report.classes),
        mismatches=len(report.mismatches),
    )
    return report


def _verified(pairing: Optional[HopfPairing]) -> bool:
    status = pairing.status if pairing is not None else None
    return status is not None and status.is_hopf and status.nondegenerate


def _skew_values(
    h: HopfSuperAlgebraData, values: Mapping[Tuple[str, str], CycRational]
) -> Dict[Tuple[str, str], CycRational]:
    rw = rewriter_for(h)
    skew = {g.name for g in rw.p.generators} if rw is not None else set()
    return {pair: v for pair, v in values.items() if pair[0] in skew}


def _exterior_row(h: HopfSuperAlgebraData, out: RowReport) -> None:
    rw = rewriter_for(h)
    theta = len(rw.p.generators) if rw is not None else 0
    pairing = exterior_pairing(theta)
    ext = pairing.left
    check = check_morphism(ext, h, extend_on_basis(ext, h, generator_vectors(h)), require_iso=True)
    out.pairing_source = "printed"
    if not check:
        out.pairing_ok = False
        out.pairing_witness = [str(check.failed), *check.witness]
        out.mismatches.append(f"{h.name} is not the exterior algebra on {theta} generators")
        return
    out.pairing_ok = _verified(pairing) and pairing_to_morphism(pairing).isomorphism


def _pairing_row(h: HopfSuperAlgebraData, partner: HopfSuperAlgebraData, entry: PairingEntry, out: RowReport) -> None:
    out.pairing_method = entry.method
    if entry.method == "exterior":
        _exterior_row(h, out)
    else:
        values = entry.as_mapping()
        pairing: Optional[HopfPairing] = None
        if entry.method == "generators":
            printed = pairing_from_generators(h, partner, values)
            if _verified(printed):
                pairing, out.pairing_source = printed, "printed"
            elif printed.status is not None:
                out.pairing_witness = [str(printed.status.failed), *printed.status.witness]
                logger.info("printed_pairing_failed", left=h.name, right=partner.name, failed=printed.status.failed)
        skew = _skew_values(h, values)
        if pairing is None:
            pairing = search_pairing(h, partner, skew)
            out.pairing_source = "searched" if pairing is not None else None
        if pairing is None:
            pairing = search_pairing(partner, h, {(b, a): v for (a, b), v in skew.items()})
            out.pairing_source = "swapped" if pairing is not None else None
        out.pairing_ok = pairing is not None and pairing_to_morphism(pairing).isomorphism
    if not out.pairing_ok:
        out.mismatches.append(f"no non-degenerate Hopf pairing with {partner.name}")


def analyse_row(row: RowEntry, p: int) -> RowReport:
    """Check the dual and pointedness columns of a table row."""
    out = RowReport(label=row.label, dual=row.dual, dual_pointed_expected=row.dual_pointed)
    try:
        h = build_named(row.label, p)
        out.name = h.name
        out.bosonization_duality = _verified(bosonization_duality(h))
        if not out.bosonization_duality:
            out.mismatches.append("bosonization duality pairing fails")
        h_dual = dual(h)
        out.dual_pointed = bool(is_pointed(h_dual))
        if out.dual_pointed != row.dual_pointed:
            out.mismatches.append(f"dual pointed: {out.dual_pointed}, expected {row.dual_pointed}")
        if row.dual is not None:
            partner = build_named(row.dual, p)
            out.dual = partner.name
            out.dual_fingerprint_matches = fingerprints_equal(fingerprint(h_dual), fingerprint(partner))
            if not out.dual_fingerprint_matches:
                out.mismatches.append(f"fingerprint of the dual differs from {partner.name}")
            if row.pairing is not None:
                _pairing_row(h, partner, row.pairing, out)
    except HopfSuperError as e:
        out.error = f"{type(e).__name__}: {e}"
        out.mismatches.append(out.error)
        logger.error("row_failed", row=row.label, error=out.error)
    logger.debug("row_analysed", row=out.name or row.label, mismatches=len(out.mismatches))
    return out


def probe_evidence(name: str, p: int) -> Tuple[List[str], bool]:
    """Build printed data and report why they fail; the flag is False when they turn out fine."""
    try:
        h = build_named(name, p)
    except HopfSuperError as e:
        return [f"{name}: {type(e).__name__}: {e}"], True
    axioms = verify_axioms(h)
    if axioms.passed:
        return [f"{name}: printed data satisfy every axiom"], False
    return [f"{name} fails {', '.join(axioms.failures())}"], True


def collect_errata(
    spec: TableSpec,
    tables: ExpectedTables,
    candidates: Sequence[CandidateReport],
    rows: Sequence[RowReport],
    p: int,
) -> Tuple[List[ErratumReport], List[str]]:
    """Merge the departures detected during the run with the errata listed for the table.

    Returns:
        The errata with their evidence, and the mismatches among them
    """
    detected: Dict[str, List[str]] = {}
    for c in candidates:
        for a in c.automorphisms:
            if a.printed and not a.ok:
                detected.setdefault(f"{c.name}:{a.name}", []).append(
                    f"printed {a.name} fails {a.check.failed} at {a.check.witness}"
                )
        if c.status == "presentation_error":
            detected.setdefault(f"{c.name}:presentation", []).append(f"overlap {' * '.join(c.overlap)} disagrees")
        for cls in c.classes:
            if cls.matched and cls.stage != "printed":
                detected.setdefault(f"{cls.label}:assignment", []).append(f"{cls.stage} images {cls.assignment}")
    for r in rows:
        if r.pairing_source in ("searched", "swapped") and r.pairing_method == "generators":
            detected.setdefault(f"{r.label}:pairing", []).append(f"printed values fail {r.pairing_witness}")

    by_name = {c.name: c for c in candidates}
    out: List[ErratumReport] = []
    mismatches: List[str] = []
    for key in dict.fromkeys([*spec.errata, *detected]):
        known = tables.erratum(key)
        evidence = list(detected.get(key, []))
        subject = by_name.get(key.rsplit(":", 1)[0])
        if subject is not None and not evidence:
            evidence.append(f"computed SD = {subject.super_data}")
            evidence += [f"{cls.name} = coinv{cls.super_datum}" for cls in subject.classes if cls.matched]
        if known is not None and known.probe:
            lines, confirmed = probe_evidence(known.probe, p)
            evidence += lines
            if not confirmed:
                mismatches.append(f"erratum {key}: {lines[0]}")
        if known is None:
            logger.warning("undocumented_erratum", key=key, evidence=evidence)
        elif not evidence:
            mismatches.append(f"erratum {key} has no evidence in this run")
        out.append(
            ErratumReport(
                key=key,
                printed=known.printed if known else "",
                corrected=known.corrected if known else "",
                note=known.note if known else "",
                known=known is not None,
                evidence=evidence,
            )
        )
    return out, mismatches


def _distinct(classes: Sequence[ClassReport]) -> List[str]:
    clashes: List[str] = []
    for i, a in enumerate(classes):
        for b in classes[i + 1 :]:
            if a.fingerprint is None or b.fingerprint is None:
                continue
            if fingerprints_equal(a.fingerprint, b.fingerprint):
                clashes.append(f"{a.name} and {b.name} share a fingerprint")
    return clashes


class Classifier:
    """Runs the classification of a table with candidates analysed concurrently."""

    def __init__(self, settings: Settings, tables: Optional[ExpectedTables] = None) -> None:
        """Initialize the classifier.

        Args:
            settings: Application settings
            tables: Expected tables; loaded from settings.data.expected_tables when omitted
        """
        self.settings = settings
        self.tables = tables if tables is not None else load_expected_tables(settings.data.expected_tables)

    def _runner(self) -> Callable[..., Any]:
        async def in_thread(fn: Callable[..., T], *args: Any) -> T:
            return await asyncio.to_thread(fn, *args)

        max_concurrent = self.settings.classify.max_concurrent
        if max_concurrent > 0:
            # Limit concurrent pipelines
            semaphore = asyncio.Semaphore(max_concurrent)

            async def limited(fn: Callable[..., T], *args: Any) -> T:
                async with semaphore:
                    return await in_thread(fn, *args)

            return limited
        return in_thread

    async def run(self, table_key: str, p: Optional[int] = None) -> ClassificationReport:
        """Classify one table.

        Args:
            table_key: Key of the table in the expected tables, e.g. "8" or "2p"
            p: Prime for parameterised tables; classify.default_p when omitted

        Returns:
            The report; mismatches are collected, never raised

        Raises:
            UnknownNameError: If the table is not in the expected tables
            ValueError: If p is not an odd prime
        """
        spec = self.tables.table(table_key)
        prime = p if p is not None else self.settings.classify.default_p
        if prime == 2 or not isprime(prime):
            raise ValueError(f"{prime} is not an odd prime")
        samples = tuple(self.settings.classify.scalar_samples)
        log = logger.bind(table=table_key, p=prime if spec.parameterised else None)
        log.info("classification_started", candidates=len(spec.candidates), rows=len(spec.rows))

        run = self._runner()
        candidate_reports, row_reports = await asyncio.gather(
            asyncio.gather(*(run(analyse_candidate, c, prime, samples) for c in spec.candidates)),
            asyncio.gather(*(run(analyse_row, r, prime) for r in spec.rows)),
        )
        candidates: List[CandidateReport] = sorted(candidate_reports, key=lambda c: c.name)
        rows: List[RowReport] = list(row_reports)

        counted = [cls for c in candidates if c.status != "probe" for cls in c.classes if cls.matched]
        mismatches = [f"{c.name}: {m}" for c in candidates for m in c.mismatches]
        mismatches += [f"{r.name or r.label}: {m}" for r in rows for m in r.mismatches]
        if len(counted) != spec.classes:
            mismatches.append(f"{len(counted)} classes found, expected {spec.classes}")
        expected_labels = {cls.label for c in spec.candidates if not c.probe for cls in c.classes}
        found_labels = [cls.label for cls in counted]
        if len(set(found_labels)) != len(found_labels):
            mismatches.append(f"a table entry is found twice: {sorted(found_labels)}")
        missing = sorted(expected_labels - set(found_labels))
        if missing:
            mismatches.append(f"table entries not found: {missing}")
        unrowed = sorted({r.label for r in rows} - set(found_labels))
        if unrowed:
            mismatches.append(f"rows without a class: {unrowed}")
        clashes = _distinct(counted)
        mismatches += clashes

        errata, errata_mismatches = await run(collect_errata, spec, self.tables, candidates, rows, prime)
        mismatches += errata_mismatches
        for m in mismatches:
            log.warning("table_mismatch", detail=m)

        report = ClassificationReport(
            table=table_key,
            title=spec.title,
            p=prime if spec.parameterised else None,
            expected_classes=spec.classes,
            found_classes=len(counted),
            classes=[cls.name for cls in counted],
            candidates=candidates,
            rows=rows,
            fingerprints_distinct=not clashes,
            errata=errata,
            mismatches=mismatches,
        )
        log.info(
            "classification_finished",
            classes=report.found_classes,
            expected=spec.classes,
            errata=len(errata),
            mismatches=len(mismatches),
        )
        return report


async def run_classification(
    table_key: str, p: Optional[int] = None, settings: Optional[Settings] = None
) -> ClassificationReport:
    """Classify a table with the given settings, or with load_settings() when omitted."""
    return await Classifier(settings if settings is not None else load_settings()).run(table_key, p)
