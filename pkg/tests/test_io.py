import json

import numpy as np
import pytest

from qevo import io
from qevo.errors import DimensionMismatch
from qevo.gates import SQRT_SWAP


def test_state_round_trip(tmp_path):
    psi = np.array([0.5, 0.5j, -0.5, 0.5])
    path = tmp_path / "s.json"
    path.write_text(json.dumps(io.state_to_json(psi)))
    assert np.array_equal(io.load_state(path), psi)


def test_operator_round_trip(tmp_path):
    path = tmp_path / "u.json"
    path.write_text(io.dumps(io.operator_to_json(SQRT_SWAP)))
    assert np.array_equal(io.load_operator(path), SQRT_SWAP)


def test_dimension_mismatches():
    with pytest.raises(DimensionMismatch):
        io.state_from_json({"dim": 4, "amplitudes": [[1, 0]] * 3})
    with pytest.raises(DimensionMismatch):
        io.operator_from_json({"dim": 2, "entries": [[[1, 0], [0, 0]], [[0, 0]]]})
    with pytest.raises(DimensionMismatch):
        io.operator_from_json({"dim": 2, "entries": [[[1, 0], [0, 0]]]})


def test_malformed_json(tmp_path):
    with pytest.raises(ValueError):
        io.state_from_json({"amplitudes": []})
    with pytest.raises(ValueError):
        io.state_from_json({"dim": 1, "amplitudes": [[1, 2, 3]]})
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ValueError):
        io.load_state(path)


def test_dumps_is_deterministic_and_strict():
    text = io.dumps({"b": float("nan"), "a": np.float64(-0.0), "c": np.arange(2)})
    assert text == io.dumps({"c": [0, 1], "a": 0.0, "b": None})
    assert json.loads(text) == {"a": 0.0, "b": None, "c": [0, 1]}
