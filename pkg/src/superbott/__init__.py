"""Exact-arithmetic characters of sheaf cohomology on super Grassmannians."""

from .partitions import Partition, SkewShape, contains, dominates, row_sum
from .characters import (
    GradedCharacter,
    VirtualCharacter,
    dual_weight,
    lr_coefficient,
    pad_weight,
    rational_tensor,
    schur_product,
    skew_expand,
    weyl_dim,
)
from .superschur import SuperDim
from .cohomology import BundleSpec, FlagSpec, HypothesisCase

__all__ = [
    "Partition",
    "SkewShape",
    "contains",
    "dominates",
    "row_sum",
    "GradedCharacter",
    "VirtualCharacter",
    "dual_weight",
    "lr_coefficient",
    "pad_weight",
    "rational_tensor",
    "schur_product",
    "skew_expand",
    "weyl_dim",
    "SuperDim",
    "BundleSpec",
    "FlagSpec",
    "HypothesisCase",
]

__version__ = "0.1.0"
