"""JSON instance files.

An instance is a finite space, a family (explicit members or an upper/lower
bounds pair), and optionally a constraint body, a zero set ``D`` and a norm::

    {
      "space":  {"kind": "discrete", "n": 2},
      "family": {"members": [[2, 0], [3, 1]]},
      "body":   {"kind": "zero_slice", "n": 2, "indices": [0]},
      "subset_d": [0],
      "norm": "sup"
    }

A bounds family is written ``{"upper": [...], "lower": [...]}``.
"""
import json
from dataclasses import dataclass

import numpy as np

from ._validation import check_family, check_vector
from .body import ConvexBody, body_from_json
from .envelope import envelopes_of_bounds, envelopes_of_family
from .exceptions import DimensionMismatchError, InstanceFormatError
from .space import FiniteSpace, make_discrete, space_from_json, space_to_json, subset_mask

NORMS = ("sup", "l1", "l2")


@dataclass(frozen=True, eq=False)
class Instance:
    space: FiniteSpace
    family: np.ndarray = None
    bounds: tuple = None
    body: ConvexBody = None
    subset_d: np.ndarray = None
    norm: str = "sup"

    def __post_init__(self):
        n = self.space.point_count
        if (self.family is None) == (self.bounds is None):
            raise InstanceFormatError("give exactly one of 'family' members or bounds")
        if self.family is not None:
            object.__setattr__(self, "family", check_family(self.family, n))
        else:
            upper, lower = self.bounds
            object.__setattr__(
                self, "bounds", (check_vector(upper, n, "upper"), check_vector(lower, n, "lower"))
            )
        if self.body is not None:
            self.body._check_dim(n)
        if self.subset_d is not None:
            object.__setattr__(self, "subset_d", subset_mask(n, self.subset_d))
        if self.norm not in NORMS:
            raise InstanceFormatError(f"unknown norm {self.norm!r}; expected one of {NORMS}")

    @property
    def dim(self):
        return self.space.point_count

    def envelopes(self):
        if self.family is not None:
            return envelopes_of_family(self.space, self.family)
        return envelopes_of_bounds(self.space, *self.bounds)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented

        def same(a, b):
            if a is None or b is None:
                return a is None and b is None
            return np.array_equal(a, b)

        bounds_equal = (self.bounds is None and other.bounds is None) or (
            self.bounds is not None
            and other.bounds is not None
            and all(np.array_equal(a, b) for a, b in zip(self.bounds, other.bounds))
        )
        return (
            self.space == other.space
            and same(self.family, other.family)
            and bounds_equal
            and self.body == other.body
            and same(self.subset_d, other.subset_d)
            and self.norm == other.norm
        )


def instance_from_dict(obj):
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance must be a JSON object")
    try:
        fam = obj["family"]
        if "space" in obj:
            space = space_from_json(obj["space"])
        else:
            width = len(fam["members"][0]) if "members" in fam else len(fam["upper"])
            space = make_discrete(width)
        n = space.point_count
        family = bounds = None
        if "members" in fam:
            family = fam["members"]
        elif "upper" in fam and "lower" in fam:
            bounds = (fam["upper"], fam["lower"])
        else:
            raise InstanceFormatError("family needs 'members' or 'upper'/'lower'")
        body = body_from_json(obj["body"], n) if obj.get("body") is not None else None
        return Instance(
            space=space,
            family=family,
            bounds=bounds,
            body=body,
            subset_d=obj.get("subset_d"),
            norm=obj.get("norm", "sup"),
        )
    except (InstanceFormatError, DimensionMismatchError):
        raise
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise InstanceFormatError(f"malformed instance: {exc}") from exc


def instance_to_dict(inst):
    out = {"space": space_to_json(inst.space)}
    if inst.family is not None:
        out["family"] = {"members": inst.family.tolist()}
    else:
        out["family"] = {"upper": inst.bounds[0].tolist(), "lower": inst.bounds[1].tolist()}
    if inst.body is not None:
        out["body"] = inst.body.to_json()
    if inst.subset_d is not None:
        out["subset_d"] = np.flatnonzero(inst.subset_d).tolist()
    out["norm"] = inst.norm
    return out


def parse_instance(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from exc
    return instance_from_dict(obj)


def serialize_instance(inst):
    return json.dumps(instance_to_dict(inst), indent=2, sort_keys=True)


def load_instance(path):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
