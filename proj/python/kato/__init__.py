"""Python front end to the kato C++ core.

Specs may be given as dicts or JSON text; reports come back as dicts.
"""

import json

from ._kato import KatoError, MassMismatch, NoCuspsFound, __version__
from . import _kato

__all__ = [
    "KatoError",
    "MassMismatch",
    "NoCuspsFound",
    "__version__",
    "audit_hydrogenic",
    "evaluate",
    "hydrogenic_spec",
    "invert",
    "lebedev_grid",
    "normalized_spec",
    "potential_from_hydrogenic",
    "scaling_map",
    "verify_cusp",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def hydrogenic_spec(z, center=(0.0, 0.0, 0.0), with_frame=True):
    spec = {
        "electron_count": 1,
        "terms": [{"kind": "slater_s", "center": list(center), "coefficient": 1.0,
                   "exponent": float(z), "power": 0}],
        "normalize": True,
    }
    if with_frame:
        spec["frame"] = [{"position": list(center), "charge": float(z)}]
    return spec


def normalized_spec(spec):
    return json.loads(_kato.normalized_spec(_text(spec)))


def evaluate(spec, points):
    return _kato.evaluate(_text(spec), [tuple(p) for p in points])


def invert(spec, seeds=8, lebedev_order=110, snap=False):
    return json.loads(_kato.invert(_text(spec), seeds, lebedev_order, snap))


def verify_cusp(spec, tol=1e-3):
    return json.loads(_kato.verify_cusp(_text(spec), tol))


def audit_hydrogenic(z1, z2, offset1=0.0, offset2=0.0, tol=1e-10):
    return json.loads(_kato.audit_hydrogenic(z1, z2, offset1, offset2, tol))


def scaling_map(source, target, r_min=1e-3, r_max=20.0, points=256):
    return json.loads(_kato.scaling_map(_text(source), _text(target), r_min, r_max, points))


def potential_from_hydrogenic(z, radii=()):
    return _kato.potential_from_hydrogenic(z, list(radii))


def lebedev_grid(order):
    return _kato.lebedev_grid(order)
