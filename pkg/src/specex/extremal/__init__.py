"""Extremal searches, lemma checks and edge-rotation instances."""

from .checks import (
    check_bv,
    check_innu,
    check_L1,
    check_lambda_floor,
    check_T1,
    check_T4,
    check_Z,
    bv_grid,
    innu_grid,
    limit_trend,
    t4_grid,
)
from .reports import CheckEntry, CheckReport, ExtremalReport
from .rotations import (
    RotationInstance,
    build_L2_instance,
    build_L5_instance,
    build_L6_instance,
    rotation_grid,
    verify_rotation,
)
from .search import extremal_scan, search_extremal

__all__ = [
    "CheckEntry",
    "CheckReport",
    "ExtremalReport",
    "RotationInstance",
    "build_L2_instance",
    "build_L5_instance",
    "build_L6_instance",
    "bv_grid",
    "check_L1",
    "check_T1",
    "check_T4",
    "check_Z",
    "check_bv",
    "check_innu",
    "check_lambda_floor",
    "extremal_scan",
    "innu_grid",
    "limit_trend",
    "rotation_grid",
    "search_extremal",
    "t4_grid",
    "verify_rotation",
]
