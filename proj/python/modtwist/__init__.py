"""Exact modular classes of twisted triangular r-matrices.

Every function takes a structure file as JSON text, a dict, or a path, and
returns the same report the command-line tool prints with ``--format json``.
Rational coefficients are converted to :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from . import _core

__all__ = [
    "Report",
    "catalog",
    "frobenius",
    "linearize",
    "modular",
    "relations",
    "render_text",
    "verify",
]

Structure = Union[str, dict, os.PathLike]

_RATIONAL = re.compile(r"-?[0-9]+(/[0-9]+)?")
# Keys whose string values are names or messages, never coefficients.
_TEXT_KEYS = {"command", "file", "cybe", "name", "offending_tuple", "error", "detail", "note", "indices", "pair", "basis"}


class Report(dict):
    """A command report; ``structure`` is set when the command emits a file."""

    def __init__(self, raw: str, structure: str | None = None):
        super().__init__(_exact(json.loads(raw)))
        self.raw = raw
        self.structure = json.loads(structure) if structure is not None else None

    @property
    def exit_code(self) -> int:
        return int(self["exit_code"])

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _exact(value: Any, key: str | None = None) -> Any:
    if key in _TEXT_KEYS:
        return value
    if isinstance(value, dict):
        return {k: _exact(v, k) for k, v in value.items()}
    if isinstance(value, list):
        return [_exact(v, key) for v in value]
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        return Fraction(value)
    return value


def _text(structure: Structure) -> str:
    if isinstance(structure, dict):
        return json.dumps(structure)
    if isinstance(structure, os.PathLike):
        return Path(structure).read_text()
    if isinstance(structure, str) and not structure.lstrip().startswith("{"):
        return Path(structure).read_text()
    return structure


def _call(fn, structure: Structure) -> Report:
    report, file = fn(_text(structure))
    return Report(report, file)


def verify(structure: Structure) -> Report:
    """Closedness of psi, the twisted CYBE and structural invariants."""
    return _call(_core.verify, structure)


def modular(structure: Structure) -> Report:
    """Carrier, kernel, characters and the modular class representative."""
    return _call(_core.modular, structure)


def frobenius(structure: Structure) -> Report:
    """Modular class from the Frobenius functional xi on the subalgebra."""
    return _call(_core.frobenius, structure)


def relations(structure: Structure) -> Report:
    """Relations between the modular classes, with residuals."""
    return _call(_core.relations, structure)


def linearize(structure: Structure) -> Report:
    """(r, psi) from mu on the subalgebra; the new file is in ``.structure``."""
    return _call(_core.linearize, structure)


def catalog(name: str, n: int = 3, check: bool = False) -> Report:
    """Built-in example ("affine", "q" or "gg"); the file is in ``.structure`` unless check is set."""
    report, file = _core.catalog(name, n, check)
    return Report(report, file)


def render_text(report: Report) -> str:
    """The plain-text rendering used by the command-line tool."""
    return _core.render_text(report.raw)
