"""Corpus of catalogued groups: JSON-lines format, one group per line.

Each line is an object {"name", "degree", "generators", "order"?, "tags"?}
with generators in 0-based disjoint-cycle notation.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import perm
from .group import PermGroup


class CorpusError(ValueError):
    """A malformed corpus file or entry."""


@dataclass
class GroupSpec:
    """A catalogued group: parsed lazily into a PermGroup."""

    name: str
    degree: int
    generators: list[str]
    order: int | None = None
    tags: tuple[str, ...] = ()
    line: int | None = None

    def build(self) -> PermGroup:
        gens = [perm.parse_cycles(s, self.degree) for s in self.generators]
        G = PermGroup(self.degree, gens, name=self.name)
        if self.order is not None and G.order != self.order:
            raise CorpusError(
                f"entry {self.name!r}: declared order {self.order} "
                f"but computed {G.order}"
            )
        return G


def _parse_entry(obj: dict, lineno: int) -> GroupSpec:
    try:
        name = obj["name"]
        degree = obj["degree"]
        generators = obj["generators"]
    except KeyError as exc:
        raise CorpusError(f"line {lineno}: missing field {exc}") from None
    if not isinstance(name, str) or not name:
        raise CorpusError(f"line {lineno}: name must be a nonempty string")
    if not isinstance(degree, int) or degree < 1:
        raise CorpusError(f"line {lineno}: bad degree {degree!r}")
    if not isinstance(generators, list) or not all(
        isinstance(s, str) for s in generators
    ):
        raise CorpusError(f"line {lineno}: generators must be strings")
    for s in generators:
        try:
            perm.parse_cycles(s, degree)
        except ValueError as exc:
            raise CorpusError(
                f"line {lineno}: entry {name!r}: bad generator {s!r}: {exc}"
            ) from None
    order = obj.get("order")
    if order is not None and (not isinstance(order, int) or order < 1):
        raise CorpusError(f"line {lineno}: bad order {order!r}")
    tags = tuple(obj.get("tags", ()))
    return GroupSpec(
        name=name,
        degree=degree,
        generators=list(generators),
        order=order,
        tags=tags,
        line=lineno,
    )


def load_corpus(path) -> list[GroupSpec]:
    """Parse a JSON-lines corpus file; errors carry line numbers."""
    path = Path(path)
    specs: list[GroupSpec] = []
    names: set[str] = set()
    with path.open() as fh:
        for lineno, raw in enumerate(fh, start=1):
            raw = raw.strip()
            if not raw or raw.startswith("#"):
                continue
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {lineno}: not valid JSON: {exc}") from None
            spec = _parse_entry(obj, lineno)
            if spec.name in names:
                raise CorpusError(
                    f"line {lineno}: duplicate group name {spec.name!r}"
                )
            names.add(spec.name)
            specs.append(spec)
    if not specs:
        warnings.warn(f"corpus {path} is empty", stacklevel=2)
    return specs


def default_corpus_path() -> Path:
    """The catalog file shipped with the package."""
    return Path(resources.files("kroncover") / "data" / "smallgroups.jsonl")


def load_default_corpus() -> list[GroupSpec]:
    return load_corpus(default_corpus_path())
