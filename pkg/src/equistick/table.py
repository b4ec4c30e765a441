"""Built-in table of minimal arc presentations with census metadata.

Presentations come from grid diagrams of minimal arc index. Each entry is
rechecked when the table loads: the Jones polynomial and determinant of its
grid diagram must match the stored values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .arcpres import ArcPresentation, validate
from .diagram import arcpres_to_diagram
from .errors import EquistickError
from .invariants import determinant, jones_polynomial
from .laurent import LaurentPolynomial, equal_up_to_mirror

__all__ = ["KnotTableEntry", "TableIntegrityError", "load_table", "get_entry", "entry_names"]


class TableIntegrityError(EquistickError):
    pass


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    presentation: ArcPresentation
    crossing_number: int
    alternating: bool
    prime: bool
    expected_jones: LaurentPolynomial  # up to mirror
    determinant: int

    @property
    def arc_index(self) -> int:
        return self.presentation.n

    @property
    def nontrivial(self) -> bool:
        return self.crossing_number > 0

    @property
    def nonalternating_prime(self) -> bool:
        return self.prime and not self.alternating


def _check(entry: KnotTableEntry):
    d = arcpres_to_diagram(entry.presentation)
    j = jones_polynomial(d)
    if not equal_up_to_mirror(j, entry.expected_jones):
        raise TableIntegrityError(f"{entry.name}: presentation has Jones {j}, table says {entry.expected_jones}")
    if determinant(d) != entry.determinant:
        raise TableIntegrityError(f"{entry.name}: determinant {determinant(d)} != {entry.determinant}")
    c, n = entry.crossing_number, entry.arc_index
    if entry.nontrivial and n > c + 2:
        raise TableIntegrityError(f"{entry.name}: {n} arcs exceeds c + 2 = {c + 2}")
    if entry.nonalternating_prime and n > c:
        raise TableIntegrityError(f"{entry.name}: non-alternating prime with {n} arcs > c = {c}")


def _parse(raw: dict) -> KnotTableEntry:
    return KnotTableEntry(
        name=raw["name"],
        presentation=validate(raw["arcs"]),
        crossing_number=int(raw["crossing_number"]),
        alternating=bool(raw["alternating"]),
        prime=bool(raw["prime"]),
        expected_jones=LaurentPolynomial.from_dict(raw["jones"]),
        determinant=int(raw["determinant"]),
    )


@lru_cache(maxsize=None)
def load_table() -> dict[str, KnotTableEntry]:
    text = resources.files("equistick").joinpath("data/knot_table.json").read_text()
    table = {}
    for raw in json.loads(text):
        entry = _parse(raw)
        _check(entry)
        table[entry.name] = entry
    return table


def entry_names() -> list[str]:
    return sorted(load_table(), key=_census_key)


def _census_key(name: str):
    if "_" not in name:
        return (-1, 0, name)
    c, k = name.split("_", 1)
    return (int(c), int(k), name)


def get_entry(name: str) -> KnotTableEntry:
    table = load_table()
    if name not in table:
        raise KeyError(f"unknown knot {name!r}; known: {', '.join(entry_names())}")
    return table[name]
