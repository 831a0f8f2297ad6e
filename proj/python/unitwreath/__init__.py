"""Wreath-product sections C2 wr G' in unit groups of modular 2-group algebras."""

import json as _json

from ._core import (
    CapExceededError,
    ConstraintError,
    ConstructionError,
    ContractError,
    Error,
    Group,
    GroupMismatchError,
    InconsistencyError,
    NoWitnessError,
    ParseError,
    algebra_multiply,
    augmentation,
    load,
    load_file,
    run_cli,
    unit_inverse,
    unit_order,
)
from . import _core

__all__ = [
    "CapExceededError",
    "ConstraintError",
    "ConstructionError",
    "ContractError",
    "Error",
    "Group",
    "GroupMismatchError",
    "InconsistencyError",
    "NoWitnessError",
    "ParseError",
    "algebra_multiply",
    "augmentation",
    "check_hypotheses",
    "construct",
    "load",
    "load_file",
    "reference_wreath",
    "run_cli",
    "scan",
    "unit_inverse",
    "unit_order",
    "verify_all",
]


def _witness_index(group, value):
    if value is None or isinstance(value, int):
        return value
    return group.element(value)


def check_hypotheses(group):
    return _json.loads(_core.check_hypotheses(group))


def construct(group, oracle=False, cap=1 << 16, a=None, b=None, z=None):
    """Run the construction; witness parts may be element indices or words."""
    return _json.loads(
        _core.construct(
            group,
            oracle=oracle,
            cap=cap,
            a=_witness_index(group, a),
            b=_witness_index(group, b),
            z=_witness_index(group, z),
        )
    )


def scan(directory, order=None):
    return _json.loads(_core.scan(str(directory), order))


def verify_all(directory, order=None, fail_fast=False):
    return _json.loads(_core.verify_all(str(directory), order, fail_fast))


def reference_wreath(s):
    return _json.loads(_core.reference_wreath(s))
