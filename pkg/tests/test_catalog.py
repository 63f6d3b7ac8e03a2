import json

import pytest

from conftest import catalog
from kfsubnormal import direct_product, load_catalog
from kfsubnormal.catalog import CATALOG_ENV, CatalogEntry, CatalogError, default_catalog_path, get_entry, parse_catalog


def test_default_catalog_validates():
    entries = load_catalog(default_catalog_path(), validate=True)
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    for must in ("S3", "S4", "A5", "F7", "C3xA5", "PSL(2,7)", "SL(2,3)", "Q8"):
        assert must in names
    assert "fixture" in get_entry("F7", entries).tags


def test_orders_match_generated_groups():
    for e in catalog():
        assert e.to_group().order == e.expected_order


def test_wrong_expected_order(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([{"name": "S3", "degree": 3, "generators": ["(1 2)", "(1 2 3)"], "expected_order": 5}]))
    with pytest.raises(CatalogError, match="expected 5"):
        load_catalog(path)
    assert load_catalog(path, validate=False)[0].expected_order == 5


@pytest.mark.parametrize("data", [
    [{"name": "x", "degree": 3, "generators": ["(1 4)"]}],
    [{"degree": 3, "generators": []}],
    [{"name": "x", "degree": 0}],
    [{"name": "x", "degree": 2}, {"name": "x", "degree": 2}],
    {"not": "a list"},
    ["string entry"],
])
def test_malformed_entries(data):
    with pytest.raises(CatalogError):
        parse_catalog(data)


def test_empty_and_wrapped():
    assert parse_catalog([]) == []
    entries = parse_catalog({"entries": [{"name": "C2", "degree": 2, "generators": ["(1 2)"], "expected_order": 2}]})
    assert entries[0].name == "C2"


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("[{")
    with pytest.raises(CatalogError):
        load_catalog(path)


def test_over_cap_entries_are_left_unvalidated():
    data = [{"name": "S6", "degree": 6, "generators": ["(1 2 3 4 5 6)", "(1 2)"], "expected_order": 720}]
    assert parse_catalog(data, cap=100)[0].name == "S6"


def test_direct_product():
    C3 = get_entry("C3", list(catalog()))
    A5 = get_entry("A5", list(catalog()))
    P = direct_product(C3, A5)
    assert P.degree == 8 and P.expected_order == 180
    assert P.to_group().order == 180
    assert P.name == "C3xA5"


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "mini.json"
    path.write_text(json.dumps([CatalogEntry("C2", 2, ["(1 2)"], 2).to_dict()]))
    monkeypatch.setenv(CATALOG_ENV, str(path))
    assert default_catalog_path() == path
    assert [e.name for e in load_catalog(default_catalog_path())] == ["C2"]


def test_unknown_entry():
    with pytest.raises(CatalogError):
        get_entry("nope", list(catalog()))
