"""Regenerate src/kfsubnormal/data/default_catalog.json.

Tags are computed from the group-level predicates, so rerun this after
changing the entry list below.
"""
import json
from pathlib import Path

from kfsubnormal.catalog import CatalogEntry, direct_product
from kfsubnormal.formations import is_member, is_simple
from kfsubnormal.perm import exponent

OUT = Path(__file__).resolve().parents[1] / "src" / "kfsubnormal" / "data" / "default_catalog.json"

BASE = [
    ("C1", 1, []),
    ("C2", 2, ["(1 2)"]),
    ("C3", 3, ["(1 2 3)"]),
    ("C4", 4, ["(1 2 3 4)"]),
    ("C5", 5, ["(1 2 3 4 5)"]),
    ("C6", 5, ["(1 2 3)(4 5)"]),
    ("C7", 7, ["(1 2 3 4 5 6 7)"]),
    ("C8", 8, ["(1 2 3 4 5 6 7 8)"]),
    ("C9", 9, ["(1 2 3 4 5 6 7 8 9)"]),
    ("V4", 4, ["(1 2)", "(3 4)"]),
    ("C4xC2", 6, ["(1 2 3 4)", "(5 6)"]),
    ("C2^3", 6, ["(1 2)", "(3 4)", "(5 6)"]),
    ("S3", 3, ["(1 2 3)", "(1 2)"]),
    ("D8", 4, ["(1 2 3 4)", "(1 3)"]),
    ("Q8", 8, ["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"]),
    ("D10", 5, ["(1 2 3 4 5)", "(2 5)(3 4)"]),
    ("D12", 6, ["(1 2 3 4 5 6)", "(2 6)(3 5)"]),
    ("A4", 4, ["(1 2 3)", "(2 3 4)"]),
    ("C3:C4", 7, ["(1 2 3)", "(1 2)(4 5 6 7)"]),
    ("D8xC2", 6, ["(1 2 3 4)", "(1 3)", "(5 6)"]),
    ("S3xC3", 6, ["(1 2 3)", "(1 2)", "(4 5 6)"]),
    ("F20", 5, ["(1 2 3 4 5)", "(2 3 5 4)"]),
    ("C7:C3", 7, ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
    ("SL(2,3)", 8, ["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)", "(3 5 7)(4 6 8)"]),
    ("S4", 4, ["(1 2 3 4)", "(1 2)"]),
    ("S3xS3", 6, ["(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"]),
    ("F7", 7, ["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"]),
    ("C2^4", 8, ["(1 2)", "(3 4)", "(5 6)", "(7 8)"]),
    ("A4xC2", 6, ["(1 2 3)", "(2 3 4)", "(5 6)"]),
    ("GL(2,3)", 8, ["(1 4 7)(2 8 5)", "(3 6)(4 7)(5 8)", "(1 3)(2 6)(5 7)"]),
    ("C2xS4", 6, ["(1 2 3 4)", "(1 2)", "(5 6)"]),
    ("A5", 5, ["(1 2 3 4 5)", "(1 2 3)"]),
    ("S5", 5, ["(1 2 3 4 5)", "(1 2)"]),
    ("PSL(2,7)", 7, ["(1 2 3 4 5 6 7)", "(1 2)(3 6)"]),
]


def main():
    entries = {name: CatalogEntry(name, deg, gens) for name, deg, gens in BASE}
    for e in entries.values():
        e.expected_order = e.to_group().order
    entries["C3xA5"] = direct_product(entries["C3"], entries["A5"])
    entries["C2xA5"] = direct_product(entries["C2"], entries["A5"])
    out = []
    for e in entries.values():
        G = e.to_group()
        tags = [t for t in e.tags]
        for tag, F in (("nilpotent", "N"), ("supersolvable", "U"), ("solvable", "S"), ("U1", "U1")):
            if is_member(G, F):
                tags.append(tag)
        if "solvable" not in tags:
            tags.append("nonsolvable")
        if is_simple(G):
            tags.append("simple")
        if e.name == "F7":
            tags.append("fixture")
        tags.append(f"exponent-{exponent(G)}")
        e.tags = tags
        out.append(e.to_dict())
    OUT.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {len(out)} entries to {OUT}")


if __name__ == "__main__":
    main()
