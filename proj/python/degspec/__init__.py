"""Exact degree sequences and spectral checks for rational maps.

Maps, models and requests are plain dicts in the same JSON layout the
``degspec`` command-line tool reads. Exact values come back as Fractions.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DegspecError

__all__ = [
    "DegspecError",
    "models",
    "hodge_signature",
    "degree_sequence",
    "stability_check",
    "fekete_estimate",
    "compose",
    "spectral_gap_report",
    "threefold_duality_check",
    "run_request",
]


def _dump(doc):
    return json.dumps(doc)


def _matrix(rows):
    return _dump([[str(x) for x in row] for row in rows])


def models():
    return list(_core.models())


def hodge_signature(model):
    """(plus, minus, zero) of the intersection form twisted by the ample class."""
    return _core.hodge_signature(_dump(model))


def degree_sequence(map_doc, n_max, p=1):
    return [Fraction(v) for v in _core.degree_sequence(_dump(map_doc), p, n_max)]


def stability_check(map_doc, n_max, p=1):
    """Returns (checked_up_to, first_failure or None)."""
    return _core.stability_check(_dump(map_doc), p, n_max)


def fekete_estimate(values):
    return json.loads(_core.fekete_estimate([str(Fraction(v)) for v in values]))


def compose(f, g):
    """f after g, reduced."""
    return json.loads(_core.compose(_dump(f), _dump(g)))


def spectral_gap_report(m1, r2, tol=1e-9, band=1e-6):
    return json.loads(_core.spectral_gap_report(_matrix(m1), float(r2), tol, band))


def threefold_duality_check(a, tol=1e-9, band=1e-6):
    return json.loads(_core.threefold_duality_check(_matrix(a), tol, band))


def run_request(request, threads=1):
    """Returns (report, exit_code) with the CLI's exit-code meaning."""
    report, code = _core.run_request(_dump(request), threads)
    return json.loads(report), code
