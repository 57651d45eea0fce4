"""Exact decision procedures for rational forms of compact Lie algebra modules.

The heavy lifting happens in the compiled extension ``qforma._core``; this
package wraps its JSON-string returns into plain dictionaries.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence, Tuple

from . import _core
from ._core import CapExceeded, HypothesisError, run_cli as _run_cli

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "HypothesisError",
    "root_system",
    "chevalley_verify",
    "structure_constants_tsv",
    "weight_report",
    "rep_build",
    "rationality_check",
    "classification_table",
    "direct_sum_example",
    "quaternion_ramification",
    "run_cli",
    "__version__",
]


def root_system(type_name: str) -> Dict[str, Any]:
    """Canonical record of a root system, e.g. ``root_system("B3")``."""
    return json.loads(_core.root_system(type_name))


def chevalley_verify(
    type_name: str,
    exhaustive: bool = False,
    seed: int = 0,
    samples: int = 500,
) -> Dict[str, Any]:
    """Jacobi and structure-constant pattern checks for one simple type."""
    return json.loads(_core.chevalley_verify(type_name, exhaustive, seed, samples))


def structure_constants_tsv(type_name: str) -> str:
    """TSV rows (alpha, beta, N) of the integral structure constants."""
    return _core.structure_constants_tsv(type_name)


def weight_report(type_name: str, weight: Sequence[int]) -> Dict[str, Any]:
    """Self-duality, coefficient sum and root-lattice data of a weight."""
    return json.loads(_core.weight_report(type_name, list(weight)))


def rep_build(
    type_name: str,
    weight: Sequence[int],
    dim_cap: int = 200,
    with_matrices: bool = False,
) -> Dict[str, Any]:
    """Build the irreducible module with the given highest weight."""
    return json.loads(_core.rep_build(type_name, list(weight), dim_cap, with_matrices))


def rationality_check(
    type_name: str,
    weight: Sequence[int],
    form: str = "standard",
    dim_cap: int = 200,
) -> Dict[str, Any]:
    """Decide whether the real module has a rational form.

    ``form`` is ``"standard"`` or ``"twisted:K"`` with K a 0-based simple
    root index.  The verdict document carries a witness lattice basis
    (HAS_Q_FORM) or the obstruction scalar (NO_Q_FORM).
    """
    return json.loads(_core.rationality_check(type_name, list(weight), form, dim_cap))


def classification_table(
    max_rank: int = 8,
    jobs: int = 1,
    su_max: int = 17,
    so_max: int = 17,
) -> Dict[str, Any]:
    """Obstruction table over simple types plus the su/so relabeling."""
    return json.loads(_core.classification_table(max_rank, jobs, su_max, so_max))


def direct_sum_example() -> Dict[str, Any]:
    """Two clean factors whose pair weight passes all three hypotheses."""
    return json.loads(_core.direct_sum_example())


def quaternion_ramification(a: str, b: str) -> Dict[str, Any]:
    """Ramified places of the rational quaternion algebra (a, b)."""
    return json.loads(_core.quaternion_ramification(str(a), str(b)))


def run_cli(args: List[str]) -> Tuple[int, str, str]:
    """Run the command line front end; returns (exit_code, stdout, stderr)."""
    return _run_cli(args)
