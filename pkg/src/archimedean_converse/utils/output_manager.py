import json
from pathlib import Path
from typing import Any, Optional, Union

from archimedean_converse.auto_config.environment import get_output_dir
from archimedean_converse.auto_config.logging_config import logger


class OutputManager:
    """Writes reports and transcripts under one output root."""

    def __init__(self, output_root: Optional[Union[Path, str]] = None) -> None:
        self.output_root = Path(output_root) if output_root else get_output_dir()

    def save_output(self, data: Any, subpath: str, name: str, as_text: bool = False) -> Path:
        """
        Save data to output_root/subpath/name.

        Text is written as-is when as_text is set or the name ends in .txt;
        anything else is dumped as JSON with sorted keys so reruns produce
        identical files.
        """
        full_dir = self.output_root / subpath
        full_dir.mkdir(parents=True, exist_ok=True)

        if as_text or name.endswith(".txt"):
            path = full_dir / name
            path.write_text(data if isinstance(data, str) else str(data), encoding="utf-8")
        else:
            if not name.endswith(".json"):
                name += ".json"
            path = full_dir / name
            with open(path, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=2, sort_keys=True)
                f.write("\n")
        logger.info(f"Saved {path}")
        return path


def save_output(data: Any, subpath: str, name: str, as_text: bool = False) -> Path:
    """Convenience wrapper around a manager rooted at the configured OUTPUT_DIR."""
    return OutputManager().save_output(data, subpath, name=name, as_text=as_text)
