import csv

import numpy as np
import pytest

from reference import CBAR_SUBOPT_ORTHO, CONCURRENCE_CLOSED_FORMS, zanardi_ass1, zanardi_ass2, zanardi_asso
from qevo.errors import UnknownScenario
from qevo.scenarios import (
    SCENARIOS,
    average_concurrence,
    run_scenario,
    scenario_setup,
    summary_table,
    write_series_csv,
    yukalov_short_time,
)


@pytest.fixture(scope="module")
def reports():
    return {sid: run_scenario(sid) for sid in SCENARIOS}


def test_unknown_scenario():
    with pytest.raises(UnknownScenario, match="bogus"):
        run_scenario("bogus")


def test_travel_time_ratios():
    t = {sid: scenario_setup(sid).travel_time for sid in SCENARIOS}
    assert t["subopt-nonortho"] / t["opt-nonortho"] == pytest.approx(np.sqrt(2), abs=1e-10)
    assert t["subopt-ortho"] / t["opt-ortho"] == pytest.approx(np.sqrt(10), abs=1e-10)


@pytest.mark.parametrize("sid", SCENARIOS)
def test_series_endpoints(reports, sid):
    s = reports[sid].series
    assert abs(s.concurrence[0]) < 1e-9
    assert abs(s.concurrence[-1] - 1) < 1e-9
    assert abs(s.yukalov[0]) < 1e-12
    assert np.all(np.diff(s.times) > 0)
    assert len(s.times) == len(s.concurrence) == len(s.yukalov) == 1025


@pytest.mark.parametrize("sid", SCENARIOS)
def test_concurrence_matches_closed_form(reports, sid):
    s = reports[sid].series
    assert np.max(np.abs(s.concurrence - CONCURRENCE_CLOSED_FORMS[sid](s.times))) < 1e-9


@pytest.mark.parametrize("sid", SCENARIOS)
def test_simpson_halving(sid):
    setup = scenario_setup(sid)
    args = (setup.hamiltonian, setup.A, setup.travel_time)
    assert abs(average_concurrence(*args, 1024) - average_concurrence(*args, 2048)) < 1e-8


def test_average_concurrence_values(reports):
    assert reports["opt-nonortho"].avg_concurrence == pytest.approx(2 / np.pi, abs=1e-5)
    assert reports["subopt-nonortho"].avg_concurrence == pytest.approx(
        (2 * np.sqrt(2) + np.arccosh(3)) / (2 * np.pi), abs=1e-4
    )
    assert reports["opt-ortho"].avg_concurrence == pytest.approx(0.5, abs=1e-6)
    assert reports["subopt-ortho"].avg_concurrence == pytest.approx(CBAR_SUBOPT_ORTHO, abs=1e-6)
    for sid in ("example1", "example2", "example3"):
        assert reports[sid].avg_concurrence == pytest.approx(2 / np.pi, abs=1e-6)


def test_average_concurrence_validation():
    setup = scenario_setup("opt-nonortho")
    with pytest.raises(ValueError):
        average_concurrence(setup.hamiltonian, setup.A, setup.travel_time, 17)
    with pytest.raises(ValueError):
        average_concurrence(setup.hamiltonian, setup.A, setup.travel_time, 8)


def test_zanardi_series_only_for_examples(reports):
    forms = {"example1": zanardi_ass1, "example2": zanardi_ass2, "example3": zanardi_asso}
    for sid in SCENARIOS:
        s = reports[sid].series
        assert len(s.c_vectors) == len(s.times)
        if sid in forms:
            assert np.max(np.abs(s.zanardi - forms[sid](s.times))) < 1e-10
        else:
            assert s.zanardi is None


def test_subopt_ortho_final_yukalov_undefined(reports):
    r = reports["subopt-ortho"]
    assert np.isnan(r.series.yukalov[-1])
    assert r.propagator.yukalov is None
    assert np.all(np.isfinite(r.series.yukalov[:-1]))


def test_example_propagators_at_travel_time(reports):
    assert reports["example1"].propagator.zanardi == pytest.approx(2 / 9, abs=1e-10)
    assert reports["example2"].propagator.zanardi == pytest.approx(1 / 6, abs=1e-10)
    assert reports["example3"].propagator.zanardi == pytest.approx(1 / 6, abs=1e-10)


def test_energy_scale_invariance():
    base = run_scenario("subopt-nonortho", n_steps=64).to_dict()
    scaled = run_scenario("subopt-nonortho", n_steps=64, energy=2.5, hbar=0.5).to_dict()
    for key, value in base["geometry"].items():
        assert scaled["geometry"][key] == pytest.approx(value, rel=1e-12, abs=1e-12)
    assert np.allclose(scaled["hamiltonian"], base["hamiltonian"], atol=1e-12)
    assert scaled["avg_concurrence"] == pytest.approx(base["avg_concurrence"], abs=1e-12)


def test_short_time_coefficients():
    expected = {
        "opt-nonortho": (1 / 8, 1 / 384),
        "subopt-nonortho": (1 / 8, -1 / 384),
    }
    for sid, (q2, q4) in expected.items():
        a, b = yukalov_short_time(scenario_setup(sid).hamiltonian)
        assert a == pytest.approx(q2, rel=1e-6)
        assert b == pytest.approx(q4, rel=1e-4)


def test_summary_table_orderings():
    table = summary_table()
    assert table.all_hold, table.orderings
    rows = table.rows
    assert rows["opt-nonortho"].avg_concurrence == pytest.approx(0.6366, abs=1e-4)
    assert rows["subopt-nonortho"].avg_concurrence == pytest.approx(0.7307, abs=1e-4)
    assert rows["opt-ortho"].yukalov_quadratic == pytest.approx(5 / 16, rel=1e-6)
    assert rows["subopt-ortho"].yukalov_quadratic == pytest.approx(5 / 8, rel=1e-6)


def test_csv_output(tmp_path, reports):
    path = tmp_path / "s.csv"
    write_series_csv(reports["example2"].series, path)
    rows = list(csv.reader(open(path)))
    assert rows[0] == ["t", "concurrence", "yukalov", "zanardi"]
    assert len(rows) == 1026
    assert float(rows[-1][0]) == pytest.approx(np.pi / 8, rel=1e-11)
    write_series_csv(reports["subopt-ortho"].series, path)
    rows = list(csv.reader(open(path)))
    assert rows[0] == ["t", "concurrence", "yukalov"]
    assert rows[-1][2] == "nan"
