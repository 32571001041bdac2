"""Length, integral closure and Behrend number of monomial fat points in the plane.

Ideals are written in the CLI syntax: ``"(x y, x^4, y^3)"``, ``"m^3"``,
``"n(2,3)"``, ``"tower(x; g = 0; exps = [1, 3])"``.
"""

import json as _json

from ._behrend import (
    SCHEMA_VERSION,
    DomainError,
    Error,
    ParseError,
    UnsupportedError,
    canonical,
    colength,
    factor_normal,
    fan_rays,
    generators,
    integral_closure,
    is_normal,
    nu,
    product_nu,
    run,
    svg,
    tower_length,
    tower_nu,
    verify,
)

__version__ = "0.1.0"


def run_json(command, expr="", **kwargs):
    """Run a command with JSON output and decode it."""
    return _json.loads(run(command, expr, format="json", **kwargs))


__all__ = [
    "SCHEMA_VERSION",
    "DomainError",
    "Error",
    "ParseError",
    "UnsupportedError",
    "canonical",
    "colength",
    "factor_normal",
    "fan_rays",
    "generators",
    "integral_closure",
    "is_normal",
    "nu",
    "product_nu",
    "run",
    "run_json",
    "svg",
    "tower_length",
    "tower_nu",
    "verify",
]
