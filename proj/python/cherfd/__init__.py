"""Exact graded characters and finite-dimensionality tests for rational
Cherednik algebras."""

import os
from pathlib import Path

from ._cherfd import (
    CherfdError,
    DecompMatrix,
    Group,
    classify,
    expansion,
    findim,
    h_weight,
    labels_in_window,
    load_decomp,
    load_group,
    parse_decomp,
    parse_group,
    poly_coeff,
    simple_character,
    verma_series,
)
from ._cherfd import run_cli as _run_cli

DATA_DIR = Path(__file__).resolve().parent / "data"


def data_path(name):
    """Path of a bundled dataset file."""
    return str(Path(os.environ.get("CHERFD_DATA", DATA_DIR)) / name)


def run_cli(args):
    """Runs one command line; returns (exit_code, stdout, stderr)."""
    os.environ.setdefault("CHERFD_DATA", str(DATA_DIR))
    return _run_cli([str(a) for a in args])


def verify_e8():
    """Reruns the bundled E8, c = 1/3 check; returns (exit_code, stdout)."""
    code, out, _ = run_cli(["verify-e8"])
    return code, out


__all__ = [
    "CherfdError",
    "DATA_DIR",
    "DecompMatrix",
    "Group",
    "classify",
    "data_path",
    "expansion",
    "findim",
    "h_weight",
    "labels_in_window",
    "load_decomp",
    "load_group",
    "parse_decomp",
    "parse_group",
    "poly_coeff",
    "run_cli",
    "simple_character",
    "verify_e8",
    "verma_series",
]
