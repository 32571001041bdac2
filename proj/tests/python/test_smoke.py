import json
import os
import pathlib

import jsonschema
import pytest

import behrend

SCHEMA_PATH = os.environ.get(
    "BEHREND_SCHEMA",
    pathlib.Path(__file__).resolve().parents[2] / "schema" / "behrend-output.v1.schema.json",
)


@pytest.fixture(scope="module")
def validator():
    with open(SCHEMA_PATH) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def test_headline_values():
    assert behrend.nu("(x y, x^4, y^3)") == 7
    assert behrend.colength("(x y, x^4, y^3)") == 6
    assert behrend.nu("m * (x, y^2) * n(2,3)") == 21
    assert behrend.colength("(x^7, x^3 y, x^2 y^3, x y^4, y^6)") == 17


def test_factorization():
    assert behrend.factor_normal("(x^6, x^4 y, x^2 y^2, x y^3, y^5)") == [
        (1, 2, 1),
        (1, 1, 1),
        (2, 1, 2),
    ]
    assert behrend.integral_closure("(x^2, y^3)") == "(x^2, x y^2, y^3)"
    assert not behrend.is_normal("(x^2, y^2)")
    assert behrend.fan_rays("n(2,3)") == [(1, 0), (3, 2), (0, 1)]


def test_towers():
    assert behrend.tower_nu("x", [1, 2, 3]) == 14
    assert behrend.tower_length("y", [1, 3]) == 5
    assert behrend.product_nu("tower(x; g=0; exps=[2]) * tower(y; g=0; exps=[3])") == 7
    five_node = (
        "m * tower(x; g = 0; exps = [2]) * tower(y; g = 0; exps = [2])"
        " * tower(x; g = y; exps = [2]) * tower(x; g = y; exps = [3])"
    )
    nodes = behrend.run_json("dynkin", five_node)["nodes"]
    assert sorted(n["self_intersection"] for n in nodes) == [-4, -2, -1, -1, -1]


def test_big_integers_round_trip():
    big = 10**30
    assert behrend.colength(f"(x^{big}, y)") == big
    assert behrend.tower_length("x", [big]) == big


def test_errors():
    with pytest.raises(behrend.ParseError):
        behrend.nu("(x^2, y")
    with pytest.raises(behrend.UnsupportedError):
        behrend.nu("(x, y, z)")
    with pytest.raises(behrend.DomainError):
        behrend.nu("(x^2, x y)")
    assert issubclass(behrend.DomainError, ValueError)


@pytest.mark.parametrize(
    "command, expr",
    [
        ("length", "(x y, x^4, y^3)"),
        ("length", "tower(x; g=0; exps=[1,2]) * tower(y; g=0; exps=[1,2])"),
        ("length", "(x^100000000000000000000, y)"),
        ("nu", "(x y, x^4, y^3)"),
        ("nu", "(x^2, y^2) * (x^6, y^6)"),
        ("nu", "tower(x; g = 1/2*y^2; exps = [1, 3])"),
        ("normalize", "(x^2, y^3)"),
        ("normal?", "(x^2, y^2)"),
        ("factor", "(x^6, x^4 y, x^2 y^2, x y^3, y^5)"),
        ("fan", "n(2,3)"),
        ("dynkin", "tower(x; g=0; exps=[2]) * tower(y; g=0; exps=[3])"),
        ("ferrers", "(x^7, x^3 y, x^2 y^3, x y^4, y^6)"),
        ("verify", ""),
    ],
)
def test_json_validates(validator, command, expr):
    out = behrend.run_json(command, expr, bounds="quick")
    validator.validate(out)
    assert out["schema"] == behrend.SCHEMA_VERSION
    assert out["command"] == command


def test_verify_quick():
    report = behrend.verify("quick", 7)
    assert report["failed"] == 0
    assert report["passed"] > 0


def test_svg_is_self_contained():
    for command in ("fan", "dynkin", "ferrers"):
        picture = behrend.svg(command, "m^2")
        assert picture.startswith("<svg")
        assert "href" not in picture
