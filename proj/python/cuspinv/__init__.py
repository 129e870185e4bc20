"""Analytic invariants of plane cusps (Python front end)."""

import json

from . import _core

__version__ = _core.__version__
CuspError = _core.CuspError


def _curve_text(curve):
    return curve if isinstance(curve, str) else json.dumps(curve)


def semigroup(n, m):
    return json.loads(_core.semigroup(n, m))


def semimodule(n, m, basis):
    return json.loads(_core.semimodule(n, m, list(basis)))


def standard_basis(curve, delorme=True):
    return json.loads(_core.standard_basis(_curve_text(curve), delorme))


def semimodule_oracle(curve):
    return json.loads(_core.semimodule_oracle(_curve_text(curve)))


def dicritical_check(form, n, m):
    return json.loads(_core.dicritical_check(_curve_text(form), n, m))


def verify(curve, i, a="1"):
    return json.loads(_core.verify(_curve_text(curve), i, str(a)))


def run(*args):
    """Run the command-line front end; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


__all__ = [
    "CuspError",
    "dicritical_check",
    "run",
    "semigroup",
    "semimodule",
    "semimodule_oracle",
    "standard_basis",
    "verify",
]
