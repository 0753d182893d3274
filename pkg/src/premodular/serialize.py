"""JSON schemas and the single two-schema loader.

Input files are discriminated by a top-level "type": "premodular" or
"metric_group".  Loading always runs the module validator and fails on
any violation.  Serialization round trips bit-exactly: all rationals
travel as strings, CycNums as {"n": conductor, "c": [[num, den], ...]}.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .cyclotomic import CycNum, make_root
from .data import PremodularData, validate_premodular
from .fusion_ring import FusionRing
from .metric_groups import MetricGroup, validate_metric_group
from .validation import ValidationReport

__all__ = [
    "ParseError",
    "ValidationError",
    "load_datum",
    "loads_datum",
    "datum_to_json",
    "ring_to_json",
    "ring_from_json",
    "premodular_to_json",
    "premodular_from_json",
    "metric_group_to_json",
    "metric_group_from_json",
    "format_element",
]


class ParseError(ValueError):
    """The file is not valid JSON or does not match either schema."""


class ValidationError(ValueError):
    """The datum parsed but fails its validator."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def format_element(x) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


def _parse_element(key: str):
    inner = key.strip()
    if not (inner.startswith("(") and inner.endswith(")")):
        raise ParseError(f"bad element key {key!r}")
    inner = inner[1:-1].strip()
    if not inner:
        raise ParseError(f"bad element key {key!r}")
    return tuple(int(t) for t in inner.split(","))


# -- fusion rings -------------------------------------------------------------


def ring_to_json(ring: FusionRing) -> dict:
    fusion = [
        [int(a), int(b), int(c), int(ring.mult[a, b, c])]
        for a, b, c in np.argwhere(ring.mult != 0)
    ]
    return {
        "labels": list(ring.labels),
        "unit": ring.unit_index,
        "dual": list(map(int, ring.dual)),
        "fusion": fusion,
    }


def ring_from_json(obj: dict) -> FusionRing:
    try:
        labels = [str(x) for x in obj["labels"]]
        r = len(labels)
        mult = np.zeros((r, r, r), dtype=np.int64)
        for a, b, c, n in obj["fusion"]:
            if not (0 <= a < r and 0 <= b < r and 0 <= c < r):
                raise ValueError(f"fusion index out of range: {(a, b, c)}")
            mult[a, b, c] = n
        return FusionRing(
            labels=labels,
            unit_index=int(obj["unit"]),
            mult=mult,
            dual=[int(x) for x in obj["dual"]],
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad fusion ring: {exc}") from None


# -- premodular data ----------------------------------------------------------


def premodular_to_json(data: PremodularData) -> dict:
    out = {"type": "premodular"}
    out.update(ring_to_json(data.ring))
    out["conductor"] = data.conductor
    out["dims"] = [d.to_json() for d in data.dims]
    out["twists"] = [t.to_json() for t in data.twists]
    if data.s is not None:
        out["s"] = [[e.to_json() for e in row] for row in data.s]
    return out


def premodular_from_json(obj: dict) -> PremodularData:
    ring = ring_from_json(obj)
    try:
        conductor = int(obj["conductor"])
        dims = [CycNum.from_json(d) for d in obj["dims"]]
        if "twists" in obj:
            twists = [CycNum.from_json(t) for t in obj["twists"]]
        elif "theta_exp" in obj:
            # rational exponents: e^(2 pi i p/q)
            twists = [make_root(int(p), int(q)) for p, q in obj["theta_exp"]]
        else:
            raise KeyError("twists")
        s = None
        if obj.get("s") is not None:
            s = [[CycNum.from_json(e) for e in row] for row in obj["s"]]
        return PremodularData(ring=ring, conductor=conductor, dims=dims, twists=twists, s=s)
    except ParseError:
        raise
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad premodular datum: {exc}") from None


# -- metric groups ------------------------------------------------------------


def metric_group_to_json(mg: MetricGroup) -> dict:
    return {
        "type": "metric_group",
        "orders": list(mg.cyclic_orders),
        "q": {format_element(x): _frac_str(v) for x, v in sorted(mg.qtable.items())},
    }


def metric_group_from_json(obj: dict) -> MetricGroup:
    try:
        orders = [int(n) for n in obj["orders"]]
        table = {_parse_element(k): Fraction(v) for k, v in obj["q"].items()}
        return MetricGroup(orders, table)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad metric group: {exc}") from None


# -- loader -------------------------------------------------------------------


def datum_to_json(datum) -> dict:
    if isinstance(datum, MetricGroup):
        return metric_group_to_json(datum)
    if isinstance(datum, PremodularData):
        return premodular_to_json(datum)
    raise TypeError(f"cannot serialize {type(datum).__name__}")


def loads_datum(text: str):
    """Parse and validate a datum from a JSON string."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "type" not in obj:
        raise ParseError('missing the "type" discriminator')
    kind = obj["type"]
    if kind == "premodular":
        datum = premodular_from_json(obj)
        report = validate_premodular(datum)
    elif kind == "metric_group":
        datum = metric_group_from_json(obj)
        report = validate_metric_group(datum)
    else:
        raise ParseError(f'unknown "type": {kind!r}')
    if not report.ok:
        raise ValidationError(report)
    return datum


def load_datum(path: str):
    """Load a premodular datum or metric group from a JSON file.

    Raises ParseError on malformed input and ValidationError (with the
    witness list) when the datum fails its validator.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads_datum(text)
