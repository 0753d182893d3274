"""Exact-arithmetic toolkit for premodular fusion data and finite metric
groups: degeneracy classification, component counts, Klein invariants,
and pointed minimal nondegenerate extensions."""

from .cyclotomic import CycNum, make_root, from_rational
from .data import PremodularData, classify_degeneracy, validate_premodular
from .fusion_ring import FusionRing, validate_fusion_ring
from .metric_groups import MetricGroup, validate_metric_group

__all__ = [
    "CycNum",
    "make_root",
    "from_rational",
    "FusionRing",
    "validate_fusion_ring",
    "PremodularData",
    "validate_premodular",
    "classify_degeneracy",
    "MetricGroup",
    "validate_metric_group",
]

__version__ = "0.1.0"
