"""JSON documents and the artifact archive."""

from .archive import ReportArchive
from .codec import AlgebraDocument, dumps, from_document, json_pointer, loads, schema_error, to_document

__all__ = [
    "AlgebraDocument",
    "ReportArchive",
    "dumps",
    "from_document",
    "json_pointer",
    "loads",
    "schema_error",
    "to_document",
]
