import json
from pathlib import Path
from typing import Any, Optional

import aiofiles
import structlog

from ..core import HopfSuperAlgebraData
from .codec import dumps, loads

logger: structlog.stdlib.BoundLogger = structlog.get_logger()


class ReportArchive:
    """Writes reports, rendered summaries and built algebras under one output directory."""

    def __init__(self, base_dir: Path) -> None:
        """Initialize the archive.

        Args:
            base_dir: Directory for every artifact; created on first write
        """
        self.base_dir = Path(base_dir)

    @staticmethod
    def safe_name(name: str) -> str:
        """File stem for a catalog name, e.g. ``A^(14)`` → ``A_14``."""
        out = "".join(ch if ch.isalnum() or ch in "-_" else "_" for ch in name)
        while "__" in out:
            out = out.replace("__", "_")
        return out.strip("_") or "unnamed"

    def _target(self, name: str, suffix: str, path: Optional[Path]) -> Path:
        target = Path(path) if path is not None else self.base_dir / f"{self.safe_name(name)}{suffix}"
        target.parent.mkdir(parents=True, exist_ok=True)
        return target

    async def save_json(self, name: str, payload: Any, path: Optional[Path] = None) -> Path:
        """Save a JSON-serializable payload, pretty-printed.

        Args:
            name: Artifact name, used for the file name when path is omitted
            payload: Data to serialize
            path: Explicit destination

        Returns:
            Path written
        """
        target = self._target(name, ".json", path)
        async with aiofiles.open(target, "w") as f:
            await f.write(json.dumps(payload, indent=2, ensure_ascii=False))
        logger.info("artifact_saved", name=name, path=str(target))
        return target

    async def save_text(self, name: str, text: str, path: Optional[Path] = None) -> Path:
        target = self._target(name, ".txt", path)
        async with aiofiles.open(target, "w") as f:
            await f.write(text)
        logger.info("artifact_saved", name=name, path=str(target))
        return target

    async def save_algebra(self, h: HopfSuperAlgebraData, path: Optional[Path] = None) -> Path:
        """Save the structure constants of h as a JSON document."""
        target = self._target(h.name, ".json", path)
        async with aiofiles.open(target, "w") as f:
            await f.write(dumps(h))
        logger.info("algebra_saved", algebra=h.name, dim=h.dim, path=str(target))
        return target

    async def load_algebra(self, path: Path) -> HopfSuperAlgebraData:
        """Load a JSON document written by save_algebra.

        Raises:
            OSError: If the file cannot be read
            SchemaError: If the document is malformed
        """
        async with aiofiles.open(path, "r") as f:
            text = await f.read()
        h = loads(text)
        logger.debug("algebra_loaded", algebra=h.name, dim=h.dim, path=str(path))
        return h
