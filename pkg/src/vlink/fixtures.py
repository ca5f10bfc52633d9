"""Bundled named diagrams (``@name`` on the command line)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .gauss import GaussDiagram, parse_gauss_code

__all__ = ["FixtureRecord", "load_fixtures", "fixture", "resolve"]


@dataclass(frozen=True)
class FixtureRecord:
    name: str
    gauss_code: str
    provenance: str
    expected: dict = field(default_factory=dict, hash=False)

    @property
    def diagram(self) -> GaussDiagram:
        return parse_gauss_code(self.gauss_code)


def load_fixtures(path: str | Path | None = None) -> dict[str, FixtureRecord]:
    if path is None:
        text = resources.files("vlink").joinpath("data/fixtures.json").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    raw = json.loads(text)
    return {
        name: FixtureRecord(name, rec["gauss_code"], rec.get("provenance", ""), rec.get("expected", {}))
        for name, rec in raw.items()
    }


def fixture(name: str, path: str | Path | None = None) -> GaussDiagram:
    return load_fixtures(path)[name].diagram


def resolve(text: str, path: str | Path | None = None) -> GaussDiagram:
    """``@name`` selects a fixture; anything else is parsed as a Gauss code."""
    if text.startswith("@"):
        table = load_fixtures(path)
        name = text[1:]
        if name not in table:
            raise KeyError(f"unknown fixture {name!r}")
        return table[name].diagram
    return parse_gauss_code(text)
