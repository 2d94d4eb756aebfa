"""Reading and writing group actions as JSON files.

The format::

    {
      "group": [8, 9],
      "generators": [ [[0, -1], [1, 1]], ... ],   one matrix per modulus
      "name": "optional label",
      "ground_truth": [                            optional, for fixtures
        {"kernel_hnf": [[2, 0], [0, 3]], "multiplicity": 2}, ...
      ]
    }

Matrix entries are integers or strings like ``"3/4"``.  Unknown keys are
ignored so files can carry extra annotations.  Serialization is canonical:
two-space indentation, sorted keys, trailing newline — byte-identical output
for equal inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .abgroup import FinAbGroup
from .action import GAction, validate_action
from .errors import ValidationError
from .ratlinalg import MatQ, MatZ, fraction_to_jsonable

__all__ = [
    "ActionFile",
    "load_action_file",
    "parse_action_file",
    "action_file_to_jsonable",
    "serialize_action_file",
]


@dataclass(frozen=True)
class ActionFile:
    """A parsed action file: the action plus optional expected multiplicities."""

    action: GAction
    ground_truth: tuple[tuple[MatZ, int], ...] | None = None


def _entry_to_fraction(v, where: str) -> Fraction:
    if isinstance(v, bool):
        raise ValidationError(f"{where}: matrix entry must be an integer or 'p/q'")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ValidationError(
                f"{where}: cannot parse {v!r} as a rational number"
            ) from None
    raise ValidationError(f"{where}: matrix entry must be an integer or 'p/q'")


def _parse_matrix(obj, where: str) -> MatQ:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ValidationError(f"{where}: matrix must be a non-empty list of rows")
    width = len(obj[0])
    if width == 0 or any(len(r) != width for r in obj):
        raise ValidationError(f"{where}: matrix rows must be non-empty and equal length")
    return MatQ(
        [[_entry_to_fraction(v, where) for v in row] for row in obj]
    )


def _parse_moduli(obj) -> FinAbGroup:
    if (
        not isinstance(obj, list)
        or not obj
        or not all(isinstance(n, int) and not isinstance(n, bool) for n in obj)
    ):
        raise ValidationError("'group' must be a non-empty list of integers")
    if any(n < 1 for n in obj):
        raise ValidationError("'group' moduli must be >= 1")
    return FinAbGroup(tuple(obj))


def parse_action_file(text: str) -> GAction:
    return load_action_file(text).action


def load_action_file(text: str) -> ActionFile:
    """Parse and fully validate an action file, ground truth included."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise ValidationError("top level must be a JSON object")
    if "group" not in obj:
        raise ValidationError("missing required key 'group'")
    if "generators" not in obj:
        raise ValidationError("missing required key 'generators'")
    group = _parse_moduli(obj["group"])
    gens = obj["generators"]
    if not isinstance(gens, list):
        raise ValidationError("'generators' must be a list of matrices")
    if len(gens) != group.rank:
        raise ValidationError(
            f"expected {group.rank} generator matrices, got {len(gens)}"
        )
    mats = [
        _parse_matrix(g, f"generator {i + 1}") for i, g in enumerate(gens)
    ]
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("'name' must be a string")
    action = validate_action(group, mats, name=name)

    ground_truth = None
    if obj.get("ground_truth") is not None:
        gt = obj["ground_truth"]
        if not isinstance(gt, list):
            raise ValidationError("'ground_truth' must be a list")
        rows = []
        for i, item in enumerate(gt):
            where = f"ground_truth entry {i + 1}"
            if not isinstance(item, dict):
                raise ValidationError(f"{where}: must be an object")
            if "kernel_hnf" not in item or "multiplicity" not in item:
                raise ValidationError(
                    f"{where}: needs 'kernel_hnf' and 'multiplicity'"
                )
            k = item["kernel_hnf"]
            if (
                not isinstance(k, list)
                or not k
                or not all(
                    isinstance(r, list)
                    and all(isinstance(v, int) and not isinstance(v, bool) for v in r)
                    for r in k
                )
            ):
                raise ValidationError(f"{where}: 'kernel_hnf' must be an integer matrix")
            m = item["multiplicity"]
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise ValidationError(
                    f"{where}: 'multiplicity' must be a non-negative integer"
                )
            try:
                rows.append((MatZ.from_jsonable(k), m))
            except Exception:
                raise ValidationError(
                    f"{where}: 'kernel_hnf' must be a rectangular integer matrix"
                ) from None
        ground_truth = tuple(rows)
    return ActionFile(action, ground_truth)


def _matrix_to_jsonable(m: MatQ) -> list:
    out = []
    for row in m.fraction_rows():
        out.append([fraction_to_jsonable(v) for v in row])
    return out


def action_file_to_jsonable(af: ActionFile) -> dict:
    obj = {
        "group": list(af.action.group.moduli),
        "generators": [_matrix_to_jsonable(m) for m in af.action.gen_matrices],
    }
    if af.action.name is not None:
        obj["name"] = af.action.name
    if af.ground_truth is not None:
        obj["ground_truth"] = [
            {"kernel_hnf": k.to_jsonable(), "multiplicity": m}
            for k, m in af.ground_truth
        ]
    return obj


def serialize_action_file(af: ActionFile) -> str:
    return json.dumps(action_file_to_jsonable(af), indent=2, sort_keys=True) + "\n"
