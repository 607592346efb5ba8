"""Plain-text rendering of a classification report in the layout of the printed tables."""

from typing import Dict, List, Sequence

from .pipeline import ClassificationReport, ClassReport, RowReport

HEADERS = ("label", "Γ", "datum", "found as", "dual", "dual pointed", "fingerprint")


def _table(headers: Sequence[str], body: Sequence[Sequence[str]]) -> List[str]:
    widths = [max(len(r[i]) for r in (headers, *body)) for i in range(len(headers))]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return [line(headers), line(["-" * w for w in widths]), *(line(r) for r in body)]


def _dual_cells(row: RowReport) -> List[str]:
    if row.dual is not None:
        partner = row.dual
        if row.pairing_ok is not None:
            partner += " (paired)" if row.pairing_ok else " (pairing FAILED)"
    else:
        partner = "-"
    pointed = "?" if row.dual_pointed is None else ("yes" if row.dual_pointed else "no")
    if row.dual_pointed is not None and row.dual_pointed != row.dual_pointed_expected:
        pointed += " (MISMATCH)"
    return [partner, pointed]


def _class_cells(cls: ClassReport, candidate: str, rows: Dict[str, RowReport]) -> List[str]:
    found = f"{candidate} at {cls.super_datum}" if cls.super_datum else f"{candidate}: not found"
    if cls.matched and cls.stage != "printed":
        found += f" [{cls.stage}]"
    row = rows.get(cls.name)
    dual = _dual_cells(row) if row is not None else ["", ""]
    status = "ok" if cls.fingerprint_matches else "DIFFERS"
    return [cls.name, cls.group, cls.datum or "-", found, *dual, status]


def render_report(report: ClassificationReport) -> str:
    """Render the classes, the candidate summary, the errata and the verdict."""
    title = report.title + (f" (p = {report.p})" if report.p is not None else "")
    out = [title, "=" * len(title), ""]
    rows = {r.name: r for r in report.rows}
    body = [
        _class_cells(cls, c.name, rows)
        for c in report.candidates
        if c.status != "probe"
        for cls in c.classes
    ]
    if body:
        out += _table(HEADERS, body)
        out.append("")

    summary = [
        [
            c.name,
            c.status,
            str(len(c.admissible)),
            str(len(c.super_data)),
            str(len(c.orbits)),
            ", ".join(o[0] for o in c.orbits) or "-",
        ]
        for c in report.candidates
    ]
    out += _table(("candidate", "status", "AD", "SD", "SD/~", "representatives"), summary)
    out.append("")

    if report.errata:
        out.append("Errata")
        for e in report.errata:
            mark = "" if e.known else " (undocumented)"
            out.append(f"  {e.key}{mark}")
            if e.printed:
                out.append(f"    printed:   {e.printed}")
            if e.corrected:
                out.append(f"    corrected: {e.corrected}")
            out += [f"    evidence:  {line}" for line in e.evidence]
        out.append("")

    out.append(f"classes: {report.found_classes} found, {report.expected_classes} expected")
    out.append(f"fingerprints pairwise distinct: {'yes' if report.fingerprints_distinct else 'no'}")
    if report.ok:
        out.append("result: matches the expected table")
    else:
        out.append(f"result: {len(report.mismatches)} mismatches")
        out += [f"  - {m}" for m in report.mismatches]
    return "\n".join(out) + "\n"
