"""Exact Newton-Okounkov body calculator.

Thin wrapper over the compiled core: rationals become :class:`fractions.Fraction`,
structured payloads become small typed objects. All arithmetic is exact; decimal
literals are rejected rather than rounded.
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

try:
    from okbody import _core  # installed layout: extension inside the package
except ImportError:  # pragma: no cover - build-tree layout
    import _core  # type: ignore[no-redef]

__all__ = [
    "Body",
    "Slice",
    "ProjectionCheck",
    "body",
    "body_off",
    "glue",
    "nobody_surface",
    "projection_check",
    "psigma",
    "run_checks",
    "seshadri_curve",
    "slice_at",
    "surface_basis",
    "surface_model_labels",
    "tower_labels",
    "vol_ray",
    "zariski",
]


def _arg(value) -> str:
    """Render one exact rational argument for the core."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    raise TypeError(
        f"exact rational expected (int, str 'p/q', or Fraction), got {type(value).__name__}"
    )


def _args(values: Mapping[str, object]) -> dict[str, str]:
    return {key: _arg(value) for key, value in values.items()}


def _vec(values: Sequence[object]) -> list[str]:
    return [_arg(v) for v in values]


def _frac(pair) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


def _point(coords) -> tuple[Fraction, ...]:
    return tuple(_frac(c) for c in coords)


@dataclass(frozen=True)
class Body:
    """Exact polytope with both representations and named coordinates."""

    dim: int
    coords: tuple[str, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[Fraction, ...], ...]
    inequalities: tuple[tuple[tuple[Fraction, ...], Fraction], ...]
    equalities: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    @classmethod
    def _from_json(cls, text: str) -> "Body":
        data = _json.loads(text)
        return cls(
            dim=data["dim"],
            coords=tuple(data["coords"]),
            vertices=tuple(_point(v) for v in data["vertices"]),
            rays=tuple(_point(r) for r in data["rays"]),
            inequalities=tuple(
                (_point(row["normal"]), _frac(row["offset"]))
                for row in data["inequalities"]
            ),
            equalities=tuple(
                (_point(row["normal"]), _frac(row["offset"]))
                for row in data["equalities"]
            ),
        )


@dataclass(frozen=True)
class Slice:
    """Planar section of a body at one sweep height."""

    t: Fraction
    component: str
    model: str
    cls: tuple[Fraction, ...]
    flag: tuple[Fraction, ...]
    x_max: Fraction
    vertices: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def _from_json(cls, text: str) -> "Slice":
        data = _json.loads(text)
        return cls(
            t=_frac(data["t"]),
            component=data["component"],
            model=data["model"],
            cls=_point(data["class"]),
            flag=_point(data["flag"]),
            x_max=_frac(data["x_max"]),
            vertices=tuple(_point(v) for v in data["polygon"]["vertices"]),
        )


@dataclass(frozen=True)
class ProjectionCheck:
    """Projected body area versus the intersection-number bound."""

    lhs: Fraction
    rhs: Fraction
    equality: bool


def tower_labels() -> list[str]:
    """Labels of the built-in threefold families."""
    return list(_core.tower_labels())


def surface_model_labels() -> list[str]:
    """Labels of the built-in surface models."""
    return list(_core.surface_model_labels())


def surface_basis(model: str) -> list[str]:
    """Divisor-class basis names of a surface model."""
    return list(_core.surface_basis(model))


def zariski(model: str, cls: Sequence[object]):
    """Zariski decomposition of a divisor class on a surface model.

    Returns ``(positive, negative)``: the positive-part class and the map of
    negative-part coefficients.
    """
    out = _core.zariski(model, _vec(cls))
    positive = tuple(Fraction(c) for c in out["positive"])
    negative = {name: Fraction(c) for name, c in out["negative"].items()}
    return positive, negative


def nobody_surface(
    model: str, cls: Sequence[object], flag: Sequence[object], infinitesimal: bool = True
) -> tuple[tuple[Fraction, ...], ...]:
    """Vertices of the two-dimensional body of a big class on a surface."""
    verts = _core.nobody_surface(model, _vec(cls), _vec(flag), infinitesimal)
    return tuple(tuple(Fraction(c) for c in v) for v in verts)


def vol_ray(family: str, values: Mapping[str, object]) -> Fraction:
    """Volume of the polarization minus ``t`` times the sweep class."""
    return Fraction(_core.vol_ray(family, _args(values)))


def psigma(family: str, values: Mapping[str, object]):
    """Decomposition coefficients along the sweep ray.

    Returns ``(positive, negative)`` maps from component names to Fractions.
    """
    out = _core.psigma(family, _args(values))
    positive = {name: Fraction(c) for name, c in out["positive"].items()}
    negative = {name: Fraction(c) for name, c in out["negative"].items()}
    return positive, negative


def body(family: str, degrees: Mapping[str, object]) -> Body:
    """Three-dimensional body of a polarization."""
    return Body._from_json(_core.body_json(family, _args(degrees)))


def body_off(family: str, degrees: Mapping[str, object]) -> str:
    """Three-dimensional body as OFF mesh text."""
    return _core.body_off(family, _args(degrees))


def glue(family: str) -> Body:
    """Four-dimensional body glued from a one-parameter family."""
    return Body._from_json(_core.glue_json(family))


def slice_at(family: str, values: Mapping[str, object]) -> Slice:
    """Planar slice of the body at height ``t``."""
    return Slice._from_json(_core.slice_json(family, _args(values)))


def seshadri_curve(family: str, degrees: Mapping[str, object]) -> Fraction:
    """Lower bound on the Seshadri constant along the section curve."""
    return Fraction(_core.seshadri_curve(family, _args(degrees)))


def projection_check(family: str, degrees: Mapping[str, object]) -> ProjectionCheck:
    """Compare the projected body area against the Seshadri-derived bound."""
    out = _core.projection_check(family, _args(degrees))
    return ProjectionCheck(
        lhs=Fraction(out["lhs"]), rhs=Fraction(out["rhs"]), equality=out["equality"]
    )


def run_checks(tier: str = "all"):
    """Run the self-check suite; returns ``(passed, report)``."""
    passed, report = _core.run_checks(tier)
    return bool(passed), report
