"""Exact computations for the imprimitive reflection groups G(e,1,n) and G(e,e,n)."""

import json
import os
from pathlib import Path

_data = Path(__file__).parent / "data" / "fourier"
if _data.is_dir():
    os.environ.setdefault("SPETS_FOURIER_DATA", str(_data))

from ._spets import (  # noqa: E402
    CycNumber,
    DomainError,
    character_table,
    coxeter_numbers,
    group_order,
    hook_degree,
)
from . import _spets  # noqa: E402

__version__ = "0.1.0"


def E(n, k=1):
    """exp(2 pi i k / n) as an exact cyclotomic number."""
    return CycNumber.root_of_unity(n, k)


def run(command, group, check="", towers="conj", cap=20160, cache_dir="", fourier_data=""):
    """Runs a CLI command and returns (exit_code, report dict without timing)."""
    code, text = _spets.run(command, group, check, towers, cap, cache_dir, fourier_data)
    return code, json.loads(text)


def verify(check, group, **kwargs):
    """True when every non-skipped check of `spets verify <check>` passes."""
    code, report = run("verify", group, check=check, **kwargs)
    return code == 0, report


__all__ = [
    "CycNumber",
    "DomainError",
    "E",
    "character_table",
    "coxeter_numbers",
    "group_order",
    "hook_degree",
    "run",
    "verify",
]
