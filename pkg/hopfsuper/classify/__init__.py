"""Automorphisms, orbits of super-data and the classification pipeline."""

from .automorphisms import (
    AutomorphismInput,
    AutomorphismSpec,
    Orbit,
    automorphism_map,
    orbits,
    verify_automorphism,
    verify_automorphisms,
)
from .match import MatchResult, match_presentation
from .pipeline import (
    CandidateReport,
    ClassificationReport,
    Classifier,
    ClassReport,
    ErratumReport,
    RowReport,
    analyse_candidate,
    analyse_row,
    run_classification,
)
from .report import render_report
from .tables import DEFAULT_TABLES_PATH, ExpectedTables, TableSpec, load_expected_tables

__all__ = [
    "DEFAULT_TABLES_PATH",
    "AutomorphismInput",
    "AutomorphismSpec",
    "CandidateReport",
    "ClassReport",
    "ClassificationReport",
    "Classifier",
    "ErratumReport",
    "ExpectedTables",
    "MatchResult",
    "Orbit",
    "RowReport",
    "TableSpec",
    "analyse_candidate",
    "analyse_row",
    "automorphism_map",
    "load_expected_tables",
    "match_presentation",
    "orbits",
    "render_report",
    "run_classification",
    "verify_automorphism",
    "verify_automorphisms",
]
