"""JSON reports emitted by the command line."""

from __future__ import annotations

import dataclasses
import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

from . import __version__

VERDICTS = ("holds", "violated", "vacuous", "found", "none-found")
# Integers beyond this magnitude lose precision in IEEE doubles.
SAFE_INT = 2**53


def to_jsonable(obj: Any) -> Any:
    """Convert results into plain JSON values.

    Big integers and fractions become decimal strings, non-finite floats
    become null, dataclasses and named tuples become objects.
    """
    from .quadrings import QuadInt

    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return to_jsonable(obj.value)
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, QuadInt):
        return {"p": to_jsonable(obj.p), "q": to_jsonable(obj.q), "D": obj.D, "text": str(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    results: dict[str, Any]
    verdict: str
    elapsed_ms: int = 0
    tool_version: str = field(default=__version__)

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": to_jsonable(self.params),
            "results": to_jsonable(self.results),
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls(**json.loads(text))


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files(__package__).joinpath("report.schema.json").read_text())
