"""JSON formats for states and operators.

state:    {"dim": 4, "amplitudes": [[re, im], ...]}
operator: {"dim": 4, "entries": [[[re, im], ...], ...]}
"""
import json
import math

import numpy as np

from .errors import DimensionMismatch


def complex_vector(v):
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).reshape(-1)]


def complex_matrix(m):
    return [complex_vector(row) for row in np.asarray(m, dtype=complex)]


def _parse_complex(pair, where):
    if isinstance(pair, (int, float)) and not isinstance(pair, bool):
        return complex(pair)
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValueError(f"{where}: expected [re, im], got {pair!r}")
    re, im = pair
    return complex(float(re), float(im))


def state_to_json(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return {"dim": int(psi.size), "amplitudes": complex_vector(psi)}


def state_from_json(obj):
    try:
        dim = int(obj["dim"])
        amps = obj["amplitudes"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"state JSON needs 'dim' and 'amplitudes': {exc}") from None
    if len(amps) != dim:
        raise DimensionMismatch(f"state declares dim {dim} but has {len(amps)} amplitudes")
    return np.array([_parse_complex(p, f"amplitude {k}") for k, p in enumerate(amps)], dtype=complex)


def operator_to_json(m):
    m = np.asarray(m, dtype=complex)
    return {"dim": int(m.shape[0]), "entries": complex_matrix(m)}


def operator_from_json(obj):
    try:
        dim = int(obj["dim"])
        rows = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"operator JSON needs 'dim' and 'entries': {exc}") from None
    if len(rows) != dim:
        raise DimensionMismatch(f"operator declares dim {dim} but has {len(rows)} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if len(row) != dim:
            raise DimensionMismatch(f"operator row {i} has length {len(row)}, expected {dim}")
        for j, p in enumerate(row):
            out[i, j] = _parse_complex(p, f"entry ({i}, {j})")
    return out


def _load(path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_state(path):
    return state_from_json(_load(path))


def load_operator(path):
    return operator_from_json(_load(path))


def _jsonable(x):
    # NaN and inf are not valid JSON; emit null instead
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, (np.integer, int)):
        return int(x)
    if isinstance(x, (np.floating, float)):
        x = float(x) + 0.0  # drops the sign of -0.0
        return x if math.isfinite(x) else None
    return x


def dumps(obj):
    """Deterministic JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(_jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"
