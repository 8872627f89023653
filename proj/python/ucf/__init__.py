"""Exact LP case analysis and set-family checks for the k = 2 frequency bound.

Rationals are returned as fractions.Fraction. Families are passed as
``(n, sets)`` with each set an iterable of elements from 1..n.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CertificateError,
    covered_set,
    element_frequencies,
    flexible_pairs,
    is_union_closed,
    largeway_constant,
    middleway_rhs,
    minimal_covers,
    minimal_two_good_sets,
    smallway_targets,
    solve_lp_text,
    spot_check_lemmas,
    trace_counts,
    union_closure,
    verify_cover_theorem,
    verify_lemma_corpus,
    verify_nagel_k2,
)

__all__ = [
    "CertificateError",
    "covered_set",
    "element_frequencies",
    "figure1",
    "flexible_pairs",
    "is_union_closed",
    "kth_frequency",
    "largeway_constant",
    "middleway_rhs",
    "min_objective",
    "minimal_covers",
    "minimal_two_good_sets",
    "smallway_targets",
    "solve_case",
    "solve_lp_text",
    "spot_check_lemmas",
    "trace_counts",
    "union_closure",
    "verify_cover_theorem",
    "verify_lemma_corpus",
    "verify_nagel_k2",
]


def _frac(text):
    return None if text is None else Fraction(text)


def _case(d):
    d = dict(d)
    d["bound"] = _frac(d["bound"])
    return d


def figure1(jobs=1):
    """Dict keyed by (s, column) with status, bound, certified, program, certificate."""
    return {key: _case(cell) for key, cell in _core.figure1(jobs).items()}


def solve_case(s, covered=None, aux_bc=False):
    """covered=None is the base program; covered=3 is the 3+ case (4 allowed for s=5)."""
    return _case(_core.solve_case(s, covered, aux_bc))


def min_objective(s, objective):
    """Minimum of a linear objective over the base program, e.g. {"q{a}": 1}."""
    return _frac(_core.min_objective(s, {k: str(Fraction(v)) for k, v in objective.items()}))


def kth_frequency(n, sets, k):
    element, count, ratio = _core.kth_frequency(n, [sorted(s) for s in sets], k)
    return element, count, Fraction(ratio)
