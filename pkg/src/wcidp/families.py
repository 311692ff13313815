"""The 45 infinite series of del Pezzo weighted complete intersections.

Every series is shipped as data (``data/family_catalog.json``): closed-form
weight, degree and amplitude expressions in the series parameters, plus the
validity constraints (gcd conditions, parity, congruences, lower bounds).
Keeping the catalog declarative makes it auditable record by record and lets
external tools re-check it without reading Python.

Expressions are evaluated over exact rationals so that constraints like
``gcd((nu*a0 - 1)/2, (a1 - a0)/2) == 1`` mean what they say: a division that
does not come out an integer simply fails the constraint, and a weight
formula that does not come out an integer invalidates the assignment.

Beyond the printed constraints, a valid assignment must instantiate to
positive ascending weights with degrees d1 <= d2.  Small parameters can break
the printed ascending order, and re-sorting would silently change which
series "contains" a tuple, so such assignments are rejected rather than
repaired.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import gcd
from typing import Iterable, Iterator, Mapping

from .classifier import Candidate

_MAX_MAGNITUDE = 1 << 63

_ALLOWED_CALLS = {"gcd", "max"}
_ALLOWED_NODES = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Compare, ast.Call, ast.Name,
    ast.Constant, ast.Load, ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Mod,
    ast.USub, ast.Eq, ast.NotEq, ast.Lt, ast.LtE, ast.Gt, ast.GtE,
)


class _NonIntegral(ArithmeticError):
    """A gcd argument came out non-integral; the enclosing constraint fails."""


def _exact_gcd(x: Fraction, y: Fraction) -> Fraction:
    if x.denominator != 1 or y.denominator != 1:
        raise _NonIntegral
    return Fraction(gcd(int(x), int(y)))


def _compile_expr(text: str, names: Iterable[str]):
    tree = ast.parse(text, mode="eval")
    allowed_names = set(names) | _ALLOWED_CALLS
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise ValueError(f"disallowed syntax {type(node).__name__!r} in {text!r}")
        if isinstance(node, ast.Name) and node.id not in allowed_names:
            raise ValueError(f"unknown name {node.id!r} in {text!r}")
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in _ALLOWED_CALLS:
                raise ValueError(f"disallowed call in {text!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, int):
            raise ValueError(f"non-integer constant in {text!r}")
    return compile(tree, f"<family:{text}>", "eval")


_EVAL_GLOBALS = {"__builtins__": {}, "gcd": _exact_gcd, "max": max}


@dataclass(frozen=True)
class FamilySpec:
    """One series: symbolic tuple formulas plus parameter constraints."""

    id: int
    parameters: tuple[str, ...]
    weights: tuple[str, str, str, str, str]
    degrees: tuple[str, str]
    amplitude: str
    constraints: tuple[str, ...]
    _codes: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        codes = {
            "weights": tuple(_compile_expr(e, self.parameters) for e in self.weights),
            "degrees": tuple(_compile_expr(e, self.parameters) for e in self.degrees),
            "amplitude": _compile_expr(self.amplitude, self.parameters),
            "constraints": tuple(
                (text, _compile_expr(text, self.parameters)) for text in self.constraints
            ),
        }
        object.__setattr__(self, "_codes", codes)

    def as_record(self) -> dict:
        return {
            "id": self.id,
            "parameters": list(self.parameters),
            "weights": list(self.weights),
            "degrees": list(self.degrees),
            "amplitude": self.amplitude,
            "constraints": list(self.constraints),
        }


@dataclass(frozen=True)
class FamilyMatch:
    """A series together with a parameter assignment hitting a tuple."""

    family_id: int
    assignment: tuple[tuple[str, int], ...]

    @property
    def params(self) -> dict[str, int]:
        return dict(self.assignment)

    def as_dict(self) -> dict:
        return {"id": self.family_id, "params": self.params}


def _load_catalog() -> tuple[FamilySpec, ...]:
    raw = resources.files(__package__).joinpath("data/family_catalog.json").read_text()
    records = json.loads(raw)
    specs = []
    for rec in records:
        specs.append(
            FamilySpec(
                id=int(rec["id"]),
                parameters=tuple(rec["parameters"]),
                weights=tuple(rec["weights"]),
                degrees=tuple(rec["degrees"]),
                amplitude=rec["amplitude"],
                constraints=tuple(rec["constraints"]),
            )
        )
    ids = [s.id for s in specs]
    if sorted(ids) != list(range(1, 46)):
        raise RuntimeError(f"family catalog must hold ids 1..45, got {sorted(ids)}")
    return tuple(sorted(specs, key=lambda s: s.id))


CATALOG: tuple[FamilySpec, ...] = _load_catalog()
_BY_ID: dict[int, FamilySpec] = {s.id: s for s in CATALOG}


def family(family_id: int) -> FamilySpec:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise ValueError(f"unknown family id: {family_id}") from None


def _frac_env(spec: FamilySpec, params: Mapping[str, int]) -> dict[str, Fraction]:
    return {name: Fraction(params[name]) for name in spec.parameters}


def _checked_names(spec: FamilySpec, params: Mapping[str, int]) -> None:
    if set(params) != set(spec.parameters):
        raise ValueError(
            f"family {spec.id} takes parameters {set(spec.parameters)}, got {set(params)}"
        )


def _instance_or_reason(
    spec: FamilySpec, params: Mapping[str, int]
) -> tuple[tuple[int, ...] | None, str | None]:
    """Evaluate one assignment: (7-tuple, None) when valid, else (None, reason)."""
    for name in spec.parameters:
        v = params[name]
        if not isinstance(v, int) or v < 1:
            return None, f"{name} must be a positive integer, got {v!r}"
    env = _frac_env(spec, params)
    for text, code in spec._codes["constraints"]:
        try:
            if not eval(code, _EVAL_GLOBALS, env):
                return None, text
        except _NonIntegral:
            return None, text
    values = []
    for expr, code in zip(spec.weights + spec.degrees, spec._codes["weights"] + spec._codes["degrees"]):
        v = eval(code, _EVAL_GLOBALS, env)
        if v.denominator != 1:
            return None, f"{expr} is not an integer"
        values.append(int(v))
    weights, degrees = values[:5], values[5:]
    if any(w < 1 for w in weights) or any(d < 1 for d in degrees):
        return None, "instantiated tuple has a non-positive entry"
    if weights != sorted(weights):
        return None, "instantiated weights are not ascending"
    if degrees[0] > degrees[1]:
        return None, "instantiated degrees are not in order d1 <= d2"
    if any(abs(v) >= _MAX_MAGNITUDE for v in values):
        raise OverflowError(f"family {spec.id} instance exceeds 64-bit range: {values}")
    return tuple(values), None


def valid_params(family_id: int, params: Mapping[str, int]) -> bool:
    """True when the assignment satisfies every constraint and instantiates
    to a canonical tuple (positive ascending weights, d1 <= d2)."""
    spec = family(family_id)
    _checked_names(spec, params)
    key, _ = _instance_or_reason(spec, params)
    return key is not None


def invalid_reason(family_id: int, params: Mapping[str, int]) -> str | None:
    """The first failed constraint (verbatim), or None when valid."""
    spec = family(family_id)
    _checked_names(spec, params)
    _, reason = _instance_or_reason(spec, params)
    return reason


def instantiate(family_id: int, params: Mapping[str, int]) -> Candidate:
    """The concrete candidate for a valid assignment."""
    spec = family(family_id)
    _checked_names(spec, params)
    key, reason = _instance_or_reason(spec, params)
    if key is None:
        raise ValueError(f"invalid parameters for family {family_id}: {reason}")
    return Candidate(key[:5], key[5], key[6])


def family_amplitude(family_id: int, params: Mapping[str, int]) -> int:
    """Value of the series' amplitude column at an assignment."""
    spec = family(family_id)
    _checked_names(spec, params)
    v = eval(spec._codes["amplitude"], _EVAL_GLOBALS, _frac_env(spec, params))
    if v.denominator != 1:
        raise ValueError(f"amplitude formula non-integral at {dict(params)}")
    return int(v)


def verify_amplitude_column(family_id: int, samples: Iterable[Mapping[str, int]]) -> bool:
    """Check computed amplitudes against the catalog's amplitude column."""
    from .classifier import amplitude

    for params in samples:
        c = instantiate(family_id, params)
        if amplitude(c) != family_amplitude(family_id, params):
            return False
    return True


def _a4_value(spec: FamilySpec, params: Mapping[str, int]) -> Fraction:
    return eval(spec._codes["weights"][4], _EVAL_GLOBALS, _frac_env(spec, params))


def _assignments_up_to(spec: FamilySpec, max_a4: int) -> Iterator[tuple[dict[str, int], tuple[int, ...]]]:
    """All valid assignments whose instance has a4 <= max_a4.

    The printed a4 formula is strictly increasing in each parameter wherever
    assignments are valid, so scans break once it climbs past the bound; hard
    caps at max_a4 + 2 per parameter keep every scan finite regardless.
    """
    cap = max_a4 + 2
    if spec.parameters == ("t",):
        for t in range(1, cap + 1):
            params = {"t": t}
            if _a4_value(spec, params) > max_a4:
                break
            key, _ = _instance_or_reason(spec, params)
            if key is not None:
                yield params, key
        return
    p_name, q_name, nu_name = spec.parameters
    for p in range(1, cap + 1):
        prev_base = None
        for q in range(p + 1, cap + 1):
            base = _a4_value(spec, {p_name: p, q_name: q, nu_name: 1})
            if base > max_a4:
                # Break only on a confirmed climb past the bound; a single
                # large value may still precede admissible ones.
                if prev_base is not None and prev_base > max_a4 and base >= prev_base:
                    break
                prev_base = base
                continue
            prev_base = base
            for nu in range(1, cap + 1):
                params = {p_name: p, q_name: q, nu_name: nu}
                if _a4_value(spec, params) > max_a4:
                    break
                key, _ = _instance_or_reason(spec, params)
                if key is not None:
                    yield params, key


def match_tuple(candidate: Candidate) -> list[FamilyMatch]:
    """Every (series, assignment) pair reproducing the candidate exactly.

    Complete by bounded search: each parameter of a valid instance is at most
    a4 + 2, and instance a4 grows strictly with each parameter.
    """
    target = candidate.key
    matches = []
    for spec in CATALOG:
        for params, key in _assignments_up_to(spec, target[4]):
            if key == target:
                matches.append(FamilyMatch(spec.id, tuple(sorted(params.items()))))
    matches.sort(key=lambda m: (m.family_id, m.assignment))
    return matches


def instances_within(max_a4: int, max_d2: int) -> dict[tuple[int, ...], tuple[FamilyMatch, ...]]:
    """All family instances inside the bounds, keyed by their 7-tuple."""
    out: dict[tuple[int, ...], list[FamilyMatch]] = {}
    for spec in CATALOG:
        for params, key in _assignments_up_to(spec, max_a4):
            if key[6] <= max_d2:
                out.setdefault(key, []).append(
                    FamilyMatch(spec.id, tuple(sorted(params.items())))
                )
    return {
        key: tuple(sorted(ms, key=lambda m: (m.family_id, m.assignment)))
        for key, ms in out.items()
    }


def smallest_assignments(family_id: int, count: int = 10) -> list[dict[str, int]]:
    """The ``count`` valid assignments with lexicographically smallest
    instances (by tuple, then by assignment)."""
    spec = family(family_id)
    bound = 16
    found: list[tuple[tuple[int, ...], tuple[tuple[str, int], ...]]] = []
    while True:
        found = [
            (key, tuple(sorted(params.items())))
            for params, key in _assignments_up_to(spec, bound)
        ]
        if len(found) >= count or bound > 1 << 20:
            break
        bound *= 2
    found.sort()
    return [dict(assignment) for _, assignment in found[:count]]


def catalog_records() -> list[dict]:
    """The catalog as plain records, for re-audit by external tools."""
    return [spec.as_record() for spec in CATALOG]
