"""Configuration text format and JSON trace export.

Text format: one j-set per line as ascending, space-separated 1-based vertex
ids.  Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import Configuration, RunResult
from .encoding import DomainError, rank_jset


class ConfigurationFormatError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


def parse_configuration(text: str, n: int, j: int, source: str = "<input>") -> Configuration:
    ranks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ConfigurationFormatError(source, lineno, f"non-integer token in {line!r}") from None
        if len(verts) != j:
            raise ConfigurationFormatError(source, lineno, f"expected {j} vertices, got {len(verts)}")
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise ConfigurationFormatError(source, lineno, "vertex ids must be strictly ascending")
        try:
            ranks.append(rank_jset(verts, n))
        except DomainError as exc:
            raise ConfigurationFormatError(source, lineno, str(exc)) from None
    return Configuration(n, j, ranks)


def read_configuration(path, n: int, j: int) -> Configuration:
    path = Path(path)
    return parse_configuration(path.read_text(encoding="utf-8"), n, j, str(path))


def format_configuration(config: Configuration, comment: str | None = None) -> str:
    lines = [] if comment is None else [f"# {line}" for line in comment.splitlines()]
    lines.extend(" ".join(map(str, s)) for s in config)
    return "\n".join(lines) + "\n"


def write_configuration(path, config: Configuration, comment: str | None = None) -> None:
    Path(path).write_text(format_configuration(config, comment), encoding="utf-8")


def trace_records(initial: Configuration, result: RunResult) -> list[dict]:
    """One record per step: ``{"t", "frontier", "infected_count"}``."""
    count = len(initial)
    out = []
    for t, frontier in enumerate(result.trace, start=1):
        count += len(frontier)
        out.append({"t": t, "frontier": frontier.to_lists(), "infected_count": count})
    return out


def dumps(obj) -> str:
    """Canonical JSON used for every machine-readable output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_trace(path, initial: Configuration, result: RunResult) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in trace_records(initial, result):
            fh.write(dumps(rec) + "\n")
