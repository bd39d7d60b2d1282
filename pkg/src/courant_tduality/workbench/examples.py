"""
Packaged example documents.

- lens(m, k, n): circle bundles of Chern numbers m and n over a flat local
  model of the two-sphere, with H₁ = k dx∧dy∧dz on the correspondence space.
- heisenberg(m): the doubled Heisenberg nilmanifold with the y-direction
  dualised onto the three-torus with H-flux.
- circle(r2): a circle of squared radius r2, dual to radius 1/r2.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Mapping
import logging

from ..core.exceptions import ValidationError
from ..para_hermitian.structure import ParaHermitianFrame
from .documents import ProblemDocument

logger = logging.getLogger(__name__)

DEFAULT_PLAN = {"seed": 20240101, "samples": 20, "box": [-1, 1]}


def _term(coeff: Any, var: str = "") -> str:
    """coeff*var as polynomial text, "0" when coeff vanishes."""
    c = Fraction(coeff)
    if c == 0:
        return "0"
    if not var:
        return str(c)
    if c == 1:
        return var
    if c == -1:
        return f"-{var}"
    return f"{c}*{var}"


def _identity(n: int):
    return [["1" if i == j else "0" for j in range(n)] for i in range(n)]


def lens(m: int = 1, k: int = 0, n: int = 0) -> Dict[str, Any]:
    """
    Correspondence space (x, y, z, zt) of L(m, k) and L(n, ·).

    θ₁ = dz + m x dy and θ₂ = dzt + n x dy; B = −θ₁∧θ₂. Reducibility along
    K₂ holds exactly when n = k.
    """
    H = [[["x", "y", "z"], str(k)]] if k else []
    B = [
        [["z", "zt"], "-1"],
        [["y", "z"], _term(n, "x")],
        [["y", "zt"], _term(-m, "x")],
    ]
    return {
        "name": f"lens_{m}_{k}_{n}",
        "command": "tdualize",
        "parameters": {"m": str(m), "k": str(k), "n": str(n)},
        "chart": ["x", "y", "z", "zt"],
        "frame": {
            "name": "lens horizontal frame",
            "labels": ["Z_x", "Z_y", "Z_z", "Z_zt"],
            "fields": [
                ["1", "0", "0", "0"],
                ["0", "1", _term(-m, "x"), _term(-n, "x")],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
        },
        "H": H,
        "B": [t for t in B if t[1] != "0"],
        "subbundles": {
            "K1": {"span": ["Z_zt"], "fiber_coords": ["zt"]},
            "K2": {"span": ["Z_z"], "fiber_coords": ["z"], "shift_B": True},
        },
        "metric": {"g": _identity(3), "frame": "induced"},
        "iso": [["0", "0", "1"]],
        "sections": [
            {"vec": ["0", "0", "1"], "form": ["0", "0", "0"]},
            {"vec": ["0", "0", "0"], "form": ["0", _term(m, "x"), "1"]},
            {"vec": ["1", "y", "0"], "form": ["x", "0", "0"]},
        ],
        "sample_plan": dict(DEFAULT_PLAN),
    }


def heisenberg(m: int = 1) -> Dict[str, Any]:
    """
    The doubled Heisenberg nilmanifold on (x, y, z, xt, yt, zt).

    L₊ = span{Z_x, Z_y, Z_z}, L₋ = span{Zt_x, Zt_y, Zt_z}; the duality
    direction is y and B = Θ^y∧Θ̃_y.
    """
    return {
        "name": f"heisenberg_{m}",
        "command": "tdualize",
        "parameters": {"m": str(m)},
        "chart": ["x", "y", "z", "xt", "yt", "zt"],
        "frame": {
            "name": "left-invariant frame",
            "labels": ["Z_x", "Z_y", "Z_z", "Zt_x", "Zt_y", "Zt_z"],
            "fields": [
                ["1", "0", "0", "0", "0", "0"],
                ["0", "1", "0", "0", "0", "0"],
                ["0", _term(m, "x"), "1", "0", "0", "0"],
                ["0", "0", "0", "1", "0", "0"],
                ["0", "0", "0", _term(m, "z"), "1", _term(-m, "x")],
                ["0", "0", "0", "0", "0", "1"],
            ],
        },
        "H": [],
        "B": [t for t in ([["y", "yt"], "1"], [["z", "yt"], _term(-m, "x")]) if t[1] != "0"],
        "subbundles": {
            "K1": {"span": ["Zt_x", "Zt_y", "Zt_z"], "fiber_coords": ["xt", "yt", "zt"]},
            "K2": {
                "span": ["Z_y", "Zt_x", "Zt_z"],
                "fiber_coords": ["y", "xt", "zt"],
                "shift_B": True,
                "quotient_names": ["xp", "zp", "yp"],
            },
        },
        "metric": {"g": _identity(3), "frame": "induced"},
        "iso": [["0", "1", "0"]],
        "phi": {
            "target": ["xp", "yp", "zp", "xtp", "ytp", "ztp"],
            "forward": ["x", "yt", "z", f"xt - {_term(m, 'z*yt')}", "y", "zt"],
            "inverse": ["xp", "ytp", "zp", f"xtp + {_term(m, 'zp*yp')}", "yp", "ztp"],
        },
        "para": {"duality": ["Z_y"], "metric": {"g": _identity(3)}},
        "sections": [
            {"vec": ["0", "1", "0"], "form": ["0", "0", "0"]},
            {"vec": ["0", "0", "0"], "form": ["0", "1", _term(-m, "x")]},
            {"vec": ["1", "0", "0"], "form": ["0", "0", "1"]},
        ],
        "sample_plan": dict(DEFAULT_PLAN),
    }


def circle(r2: Any = 4) -> Dict[str, Any]:
    """
    A circle of squared radius r2 on the doubled chart (t, tt).

    Raises:
        ValidationError: Unless r2 is a positive rational.
    """
    value = Fraction(str(r2))
    if value <= 0:
        raise ValidationError(f"r2 must be positive, got {value}")
    text = str(value)
    return {
        "name": "circle",
        "command": "tdualize",
        "parameters": {"r2": text},
        "chart": ["t", "tt"],
        "frame": {"name": "coordinate", "labels": ["Z_t", "Zt_t"], "fields": _identity(2)},
        "H": [],
        "B": [[["t", "tt"], "1"]],
        "subbundles": {
            "K1": {"span": ["Zt_t"], "fiber_coords": ["tt"]},
            "K2": {"span": ["Z_t"], "fiber_coords": ["t"], "shift_B": True},
        },
        "metric": {"g": [[text]]},
        "iso": [["1"]],
        "phi": {"target": ["tp", "ttp"], "forward": ["tt", "t"], "inverse": ["ttp", "tp"]},
        "para": {"duality": ["Z_t"], "metric": {"g": [[text]]}},
        "sections": [{"vec": ["1"], "form": ["0"]}, {"vec": ["0"], "form": ["1"]}],
        "sample_plan": dict(DEFAULT_PLAN),
    }


EXAMPLES: Mapping[str, Callable[..., Dict[str, Any]]] = {
    "lens": lens,
    "heisenberg": heisenberg,
    "circle": circle,
}

_INTEGER_PARAMS = {"m", "k", "n"}


def example_document(name: str, params: Mapping[str, str] = ()) -> ProblemDocument:
    """
    Build a packaged example, e.g. example_document("lens", {"m": "1", "k": "1", "n": "1"}).

    Raises:
        ValidationError: For an unknown example or parameter.
    """
    if name not in EXAMPLES:
        raise ValidationError(f"Unknown example '{name}', expected one of {sorted(EXAMPLES)}")
    kwargs: Dict[str, Any] = {}
    for key, value in dict(params).items():
        if key in _INTEGER_PARAMS:
            try:
                kwargs[key] = int(value)
            except ValueError:
                raise ValidationError(f"Parameter {key} must be an integer, got '{value}'")
        else:
            kwargs[key] = value
    try:
        data = EXAMPLES[name](**kwargs)
    except TypeError:
        raise ValidationError(f"Example '{name}' does not take parameters {sorted(kwargs)}")
    logger.debug(f"Example document {data['name']} built")
    return ProblemDocument(data)


def heisenberg_frame(m: int = 1) -> ParaHermitianFrame:
    """The para-Hermitian frame of the doubled Heisenberg nilmanifold."""
    return example_document("heisenberg", {"m": str(m)}).para()[0]
