"""Quantum seeds of reduced words.

Indices in this module are 0-based, matching the C++ library. The command
line tool and its JSON output are 1-based.
"""

from fractions import Fraction

from ._core import (
    Cartan,
    GlsSeed,
    InputError,
    QuantumSeed,
    Refusal,
    TorusElement,
    Word,
    boxes_commute,
    build_gls,
    exact_div_right,
    g_to_pbw,
    gl_pairing,
    gr_pairing,
    l_pairing,
    lambda_boxes,
    pbw_of_cluster_monomial,
    pbw_to_g,
    verify,
)


def form(cartan, x, y):
    """Invariant form of two weights (fundamental-weight coordinates)."""
    num, den = cartan.form(list(x), list(y))
    return Fraction(num, den)


def gls(type_name, letters):
    """GLS seed for a preset type and a 0-based reduced word."""
    return build_gls(Word(Cartan.preset(type_name), list(letters)))


__all__ = [
    "Cartan",
    "GlsSeed",
    "InputError",
    "QuantumSeed",
    "Refusal",
    "TorusElement",
    "Word",
    "boxes_commute",
    "build_gls",
    "exact_div_right",
    "form",
    "g_to_pbw",
    "gl_pairing",
    "gls",
    "gr_pairing",
    "l_pairing",
    "lambda_boxes",
    "pbw_of_cluster_monomial",
    "pbw_to_g",
    "verify",
]
