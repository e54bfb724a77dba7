"""Reversed Dickson polynomials over finite fields of characteristic p > 3.

Field elements are passed and returned as enumeration indices: the element
c0 + c1 g + ... + c_{e-1} g^{e-1} has index c0 + c1 p + ... + c_{e-1} p^{e-1}.
"""

from ._dicksonlab import (
    DicksonError,
    Field,
    b_table,
    coefficients,
    evaluate,
    evaluate_all,
    first_moment,
    is_pp,
    moments,
    run_cli,
    scan_pp,
    verify,
)

__all__ = [
    "DicksonError",
    "Field",
    "b_table",
    "coefficients",
    "evaluate",
    "evaluate_all",
    "first_moment",
    "is_pp",
    "moments",
    "run_cli",
    "scan_pp",
    "verify",
]

__version__ = "0.1.0"
