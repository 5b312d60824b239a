"""Exact canonical unitons, their Grassmannian models and unitary factorizations.

Planes, potentials and reports are plain dicts in the same JSON layout the
``uniton`` command line tool reads and writes.
"""

import json

from . import _uniton
from ._uniton import (
    InputError,
    NumericError,
    bound_table,
    eells_wood,
    integrate,
    normalize,
    types,
    uniton_bound,
)

__all__ = [
    "InputError",
    "NumericError",
    "bound_table",
    "check_ces",
    "cpn_plane",
    "deform",
    "eells_wood",
    "harmonic_residual",
    "integrate",
    "model_plane",
    "normalize",
    "phi",
    "pluecker_degree",
    "solve_canonical",
    "types",
    "uniton_bound",
    "uniton_width",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def solve_canonical(type, b1):
    """Potential B_1..B_k for B_1 given as {"r,c": "expr"}; raises InputError on a log obstruction."""
    return json.loads(_uniton.solve_canonical(list(type), _text(b1)))


def model_plane(type, b1):
    return json.loads(_uniton.model_plane(list(type), _text(b1)))


def cpn_plane(f, i):
    return json.loads(_uniton.cpn_plane(list(f), i))


def pluecker_degree(plane):
    return _uniton.pluecker_degree(_text(plane))


def uniton_width(plane):
    return _uniton.uniton_width(_text(plane))


def check_ces(plane):
    return _uniton.check_ces(_text(plane))


def phi(plane, z):
    """The harmonic map at z as a complex numpy array."""
    return _uniton.phi(_text(plane), complex(z))


def harmonic_residual(plane, center, h, half_width):
    return json.loads(_uniton.harmonic_residual(_text(plane), complex(center), h, half_width))


def deform(alpha, beta, delta, m=10):
    return json.loads(_uniton.deform(alpha, beta, delta, m))
