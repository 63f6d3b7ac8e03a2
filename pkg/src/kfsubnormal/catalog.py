"""Catalog of small permutation groups given by cycle-notation generators."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .perm import DEFAULT_ORDER_CAP, CapExceeded, Group, Permutation, PermutationError, generate_group, parse_permutation

CATALOG_ENV = "KFSUB_CATALOG"


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: list[str]
    expected_order: int | None = None
    tags: list[str] = field(default_factory=list)

    def permutations(self) -> list[Permutation]:
        return [parse_permutation(g, self.degree) for g in self.generators]

    def to_group(self, cap: int = DEFAULT_ORDER_CAP) -> Group:
        G = generate_group(self.permutations(), self.degree, cap=cap)
        if self.expected_order is not None and G.order != self.expected_order:
            raise CatalogError(f"{self.name}: generated order {G.order}, expected {self.expected_order}")
        return G

    def to_dict(self) -> dict:
        return asdict(self)


def _entry_from(obj, i: int) -> CatalogEntry:
    if not isinstance(obj, dict):
        raise CatalogError(f"entry {i}: expected an object")
    try:
        entry = CatalogEntry(
            name=str(obj["name"]),
            degree=int(obj["degree"]),
            generators=[str(g) for g in obj.get("generators", [])],
            expected_order=None if obj.get("expected_order") is None else int(obj["expected_order"]),
            tags=[str(t) for t in obj.get("tags", [])],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"entry {i}: {exc!r}") from None
    if entry.degree < 1:
        raise CatalogError(f"entry {i} ({entry.name}): degree must be positive")
    try:
        entry.permutations()
    except PermutationError as exc:
        raise CatalogError(f"entry {i} ({entry.name}): {exc}") from None
    return entry


def parse_catalog(data, validate: bool = True, cap: int = DEFAULT_ORDER_CAP) -> list[CatalogEntry]:
    """Entries from decoded JSON: a list, or an object with an ``entries`` list.

    With ``validate`` the expected orders are confirmed by closure; groups
    beyond ``cap`` are left for the caller to skip.
    """
    if isinstance(data, dict) and "entries" in data:
        data = data["entries"]
    if not isinstance(data, list):
        raise CatalogError("catalog must be a JSON list of entries")
    entries = [_entry_from(obj, i) for i, obj in enumerate(data)]
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise CatalogError("duplicate entry names")
    if validate:
        for i, e in enumerate(entries):
            try:
                e.to_group(cap)
            except CapExceeded:
                continue
            except CatalogError as exc:
                raise CatalogError(f"entry {i}: {exc}") from None
    return entries


def load_catalog(path, validate: bool = True, cap: int = DEFAULT_ORDER_CAP) -> list[CatalogEntry]:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON ({exc})") from None
    return parse_catalog(data, validate=validate, cap=cap)


def default_catalog_path() -> Path:
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("kfsubnormal") / "data" / "default_catalog.json"))


def default_catalog(validate: bool = False) -> list[CatalogEntry]:
    return load_catalog(default_catalog_path(), validate=validate)


def get_entry(name: str, entries: list[CatalogEntry] | None = None) -> CatalogEntry:
    for e in entries if entries is not None else default_catalog():
        if e.name == name:
            return e
    raise CatalogError(f"no catalog entry named {name!r}")


def _shift(cycle_text: str, degree: int, offset: int, total: int) -> str:
    p = parse_permutation(cycle_text, degree)
    images = list(range(total))
    for i, x in enumerate(p.images):
        images[i + offset] = x + offset
    return Permutation(tuple(images)).cycle_string()


def direct_product(A: CatalogEntry, B: CatalogEntry, name: str | None = None) -> CatalogEntry:
    """A x B on degA + degB points, B moved onto the points after A's."""
    total = A.degree + B.degree
    gens = [_shift(g, A.degree, 0, total) for g in A.generators]
    gens += [_shift(g, B.degree, A.degree, total) for g in B.generators]
    order = None
    if A.expected_order is not None and B.expected_order is not None:
        order = A.expected_order * B.expected_order
    return CatalogEntry(
        name=name or f"{A.name}x{B.name}",
        degree=total,
        generators=[g for g in gens if g],
        expected_order=order,
        tags=["direct-product"],
    )
