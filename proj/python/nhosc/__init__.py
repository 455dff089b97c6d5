"""Python access to the exact Jordan-cell engine.

Rationals are passed and returned as "num/den" strings; structured results
are decoded from the engine's JSON.
"""

import json

from . import _nhosc
from ._nhosc import Error, InvalidParams, ParseError, UnsolvableConstraints, moment, quad_moment, spectrum


def build_cells(lambda_, b, omega, nmax):
    return json.loads(_nhosc.build_cells(lambda_, b, omega, nmax))


def verify_cells(cells):
    return json.loads(_nhosc.verify_cells(json.dumps(cells)))


def apply_H(fn):
    return json.loads(_nhosc.apply_H(json.dumps(fn)))


def pairing(f, g):
    return json.loads(_nhosc.pairing(json.dumps(f), json.dumps(g)))


__all__ = [
    "Error",
    "InvalidParams",
    "ParseError",
    "UnsolvableConstraints",
    "apply_H",
    "build_cells",
    "moment",
    "pairing",
    "quad_moment",
    "spectrum",
    "verify_cells",
]
