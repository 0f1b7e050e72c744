"""Exact transition coefficients of degenerate principal series."""

import json
from fractions import Fraction

from . import _ktrans
from ._ktrans import IllegalParameters, InadmissibleTarget, PreconditionFailed, UnstableBound, version

__version__ = version

__all__ = [
    "IllegalParameters",
    "InadmissibleTarget",
    "PreconditionFailed",
    "UnstableBound",
    "c_ratio",
    "complementary_scan",
    "emit_graph",
    "enumerate_ktypes",
    "group_datum",
    "identity_sum",
    "run",
    "schur_constants",
    "transition",
    "version",
]


def _q(text):
    return Fraction(text)


def _nu(value):
    return str(Fraction(value))


def _sigma(sigma):
    if isinstance(sigma, str):
        return [1 if ch == "+" else -1 for ch in sigma]
    return [int(x) for x in sigma]


def run(*args):
    """Run one CLI command; returns (exit_code, stdout, stderr)."""
    if len(args) == 1 and isinstance(args[0], (list, tuple)):
        args = args[0]
    return _ktrans.run([str(a) for a in args])


def group_datum(spec):
    return json.loads(_ktrans.group_datum(spec))


def enumerate_ktypes(spec, bound):
    return _ktrans.enumerate(spec, bound)


def c_ratio(spec, mu, l, sigma, lshift):
    return _q(_ktrans.c_ratio(spec, list(mu), l, _sigma(sigma), lshift))


def transition(spec, nu, mu, l, sigma, lshift):
    return _q(_ktrans.transition(spec, _nu(nu), list(mu), l, _sigma(sigma), lshift))


def identity_sum(spec, mu, l, lshift):
    return _q(_ktrans.identity_sum(spec, list(mu), l, lshift))


def complementary_scan(spec, bound=12):
    return json.loads(_ktrans.complementary_scan(spec, bound))


def schur_constants(spec, nu, bound):
    return json.loads(_ktrans.schur_constants(spec, _nu(nu), bound))


def emit_graph(spec, nu, bound, format="json"):
    return _ktrans.emit_graph(spec, _nu(nu), bound, format)
