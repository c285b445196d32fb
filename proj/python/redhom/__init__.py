"""Python access to the redhom core.

Rings are catalog ids ("R1q5", "R3q2a2b3", ...) or ring documents as dicts.
Modules use the same spec grammar as the command line: "k", "free:2",
"syzygy:1:k", "sum:k|free:1", "random:SEED:MAXDIM".
"""

import json

from . import _core
from ._core import ContractViolation, InputError, InvariantError

__version__ = _core.__version__

__all__ = [
    "ContractViolation",
    "InputError",
    "InvariantError",
    "bass",
    "betti",
    "catalog",
    "classify",
    "ext",
    "growth",
    "module",
    "reduce",
    "ring_info",
    "run",
]


def _ring(ring):
    return ring if isinstance(ring, str) else json.dumps(ring)


def run(*args):
    """Run a CLI command in-process. Returns (exit_code, report dict or None, summary)."""
    code, out, err = _core.run([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err


def catalog(p=5):
    return json.loads(_core.catalog(p))


def ring_info(ring, p=0):
    return json.loads(_core.ring_info(_ring(ring), p))


def module(ring, spec, p=0):
    return json.loads(_core.module(_ring(ring), spec, p))


def betti(ring, spec, bound, p=0):
    return _core.betti(_ring(ring), spec, bound, p)


def bass(ring, bound, p=0):
    return _core.bass(_ring(ring), bound, p)


def ext(ring, spec, target="lambda", bound=4, p=0):
    """dim Ext^i(M, N) for i = 0..bound; target "lambda" is the regular module."""
    return _core.ext(_ring(ring), spec, target, bound, p)


def classify(ring, spec, bound=4, p=0):
    return json.loads(_core.classify(_ring(ring), spec, bound, p))


def reduce(ring, spec, mode="red", target="pd", **limits):
    return json.loads(_core.reduce(_ring(ring), spec, mode, target, **limits))


def growth(values, kind="betti"):
    return json.loads(_core.growth(list(values), kind))
