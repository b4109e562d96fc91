"""The seven reference evolutions and their entanglement time series.

Four scenarios connect |00> to a Bell state (optimal and suboptimal, for a
nonorthogonal and an orthogonal target); three examples connect |01> to a
maximally entangled state with different nonlocal Hamiltonians.
"""
import csv
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import simpson

from .entanglement import PHI_PLUS, PSI_PLUS, concurrence
from .errors import UnknownScenario
from .gates import (
    TRACE_TOL,
    PropagatorAnalysis,
    analyze_propagator,
    canonical_hamiltonian,
    fold_weyl,
    weyl_cvector_raw,
    yukalov_production,
    zanardi_power_canonical,
)
from .geometry import GeometryReport, energy_uncertainty, geometry_report
from .hamiltonians import (
    EvolutionSetup,
    build_four_level_orthogonal,
    build_optimal,
    build_suboptimal,
)
from .io import complex_matrix, complex_vector
from .linalg import hermitian_eigensystem, ket

SCENARIOS = (
    "opt-nonortho",
    "subopt-nonortho",
    "opt-ortho",
    "subopt-ortho",
    "example1",
    "example2",
    "example3",
)
EXAMPLES = ("example1", "example2", "example3")

B_EXAMPLE = np.array([0, (1 + 1j) / 2, (1 - 1j) / 2, 0], dtype=complex)


def _fixed_setup(h, a, b, travel_time, label, **params):
    return EvolutionSetup(
        hamiltonian=h,
        A=a,
        B=b,
        travel_time=travel_time,
        label=label,
        delta_E=energy_uncertainty(h, a),
        params=params,
    )


def scenario_setup(scenario_id, energy=1.0, hbar=1.0):
    """EvolutionSetup of a named scenario with energy scale E and Planck constant ħ."""
    E = float(energy)
    if scenario_id == "opt-nonortho":
        return build_optimal(ket("00"), PHI_PLUS, E / math.sqrt(2), hbar)
    if scenario_id == "subopt-nonortho":
        return build_suboptimal(ket("00"), PHI_PLUS, E, 1 + math.sqrt(2), hbar)
    if scenario_id == "opt-ortho":
        return build_optimal(ket("00"), PSI_PLUS, math.sqrt(2.5) * E, hbar)
    if scenario_id == "subopt-ortho":
        return build_four_level_orthogonal(E, hbar)
    if scenario_id == "example1":
        h = E * canonical_hamiltonian((1, 0, 1))
        return _fixed_setup(h, ket("01"), B_EXAMPLE, math.pi * hbar / (4 * E), "optimal")
    if scenario_id == "example2":
        h = E * canonical_hamiltonian((1, 1, 1))
        return _fixed_setup(h, ket("01"), B_EXAMPLE, math.pi * hbar / (8 * E), "optimal")
    if scenario_id == "example3":
        return build_optimal(ket("01"), B_EXAMPLE, 2 * E, hbar)
    raise UnknownScenario(f"unknown scenario {scenario_id!r}; expected one of {', '.join(SCENARIOS)}")


class _Evolution:
    """Cached spectral decomposition of a stationary Hamiltonian."""

    def __init__(self, h, hbar=1.0):
        self.evals, self.vecs = hermitian_eigensystem(h)
        self.hbar = hbar

    def propagator(self, t):
        if t == 0:
            return np.eye(len(self.evals), dtype=complex)
        return (self.vecs * np.exp(-1j * self.evals * t / self.hbar)) @ self.vecs.conj().T

    def states(self, psi, times):
        coeffs = self.vecs.conj().T @ psi
        phases = np.exp(-1j * np.outer(times, self.evals) / self.hbar)
        return (phases * coeffs) @ self.vecs.T


def _time_grid(t_final, n_steps):
    if n_steps < 16:
        raise ValueError("n_steps must be at least 16")
    return np.linspace(0.0, t_final, n_steps + 1)


def average_concurrence(h, a, t_final, n_steps=1024, hbar=1.0):
    """Time average of C(U(t)|A>) over [0, t_final] by composite Simpson."""
    if n_steps % 2:
        raise ValueError("n_steps must be even")
    times = _time_grid(t_final, n_steps)
    psi_t = _Evolution(h, hbar).states(np.asarray(a, dtype=complex), times)
    c = np.array([concurrence(p) for p in psi_t])
    return float(simpson(c, x=times) / t_final)


@dataclass
class TimeSeries:
    times: np.ndarray
    concurrence: np.ndarray
    yukalov: np.ndarray
    zanardi: Optional[np.ndarray] = None
    c_vectors: list = field(default_factory=list)  # folded, one per time


def concurrence_series(h, a, t_final, n_steps=1024, hbar=1.0):
    times = _time_grid(t_final, n_steps)
    psi_t = _Evolution(h, hbar).states(np.asarray(a, dtype=complex), times)
    return times, np.array([concurrence(p) for p in psi_t])


def _safe_yukalov(u):
    if abs(np.trace(u)) <= TRACE_TOL:
        return float("nan")
    return yukalov_production(u)


def propagator_series(h, times, hbar=1.0, with_zanardi=False):
    """Yukalov production, folded c-vectors and optionally Zanardi power along U(t)."""
    evo = _Evolution(h, hbar)
    yuk, cvs, zan = [], [], []
    for t in times:
        u = evo.propagator(t)
        yuk.append(_safe_yukalov(u))
        raw = weyl_cvector_raw(u)
        cvs.append(fold_weyl(raw))
        zan.append(zanardi_power_canonical(raw))
    return np.array(yuk), cvs, (np.array(zan) if with_zanardi else None)


def yukalov_short_time(h, hbar=1.0, t_max=0.1, n_points=24):
    """Quadratic and quartic coefficients of ε_Yukalov(t) ≈ a t² + b t⁴ near t = 0."""
    evo = _Evolution(h, hbar)
    times = np.linspace(t_max / n_points, t_max, n_points)
    eps = np.array([yukalov_production(evo.propagator(t)) for t in times])
    basis = np.column_stack([times ** (2 * k) for k in range(1, 5)])
    coef, *_ = np.linalg.lstsq(basis, eps, rcond=None)
    return float(coef[0]), float(coef[1])


@dataclass
class ScenarioReport:
    scenario: str
    setup: EvolutionSetup
    geometry: GeometryReport
    avg_concurrence: float
    series: TimeSeries
    propagator: PropagatorAnalysis
    energy: float = 1.0
    hbar: float = 1.0

    def to_dict(self):
        """JSON-ready dict with times in ħ/E and energies in E."""
        t_unit = self.hbar / self.energy
        g = self.geometry
        geometry = {
            "delta_E": g.delta_E / self.energy,
            "s0": g.s0,
            "s": g.s,
            "travel_time": g.travel_time / t_unit,
            "eta_GE": g.eta_GE,
            "eta_SE": g.eta_SE,
            "kappa_sq": g.kappa_sq,
            "speed": g.speed * t_unit,
            "avg_entanglement_speed": g.avg_entanglement_speed * t_unit,
        }
        return {
            "scenario": self.scenario,
            "label": self.setup.label,
            "units": {"time": "hbar/E", "energy": "E"},
            "hamiltonian": complex_matrix(self.setup.hamiltonian / self.energy),
            "A": complex_vector(self.setup.A),
            "B": complex_vector(self.setup.B),
            "geometry": geometry,
            "avg_concurrence": self.avg_concurrence,
            "propagator": self.propagator.to_dict(),
            "n_steps": len(self.series.times) - 1,
        }


def run_scenario(scenario_id, n_steps=1024, energy=1.0, hbar=1.0, n_samples=None, seed=0):
    setup = scenario_setup(scenario_id, energy, hbar)
    h, a, b, t_f = setup.hamiltonian, setup.A, setup.B, setup.travel_time
    times, conc = concurrence_series(h, a, t_f, n_steps, hbar)
    yuk, cvs, zan = propagator_series(h, times, hbar, with_zanardi=scenario_id in EXAMPLES)
    series = TimeSeries(times=times, concurrence=conc, yukalov=yuk, zanardi=zan, c_vectors=cvs)
    geometry = geometry_report(h, a, b, t_f, hbar, c_initial=conc[0], c_final=conc[-1])
    u_final = _Evolution(h, hbar).propagator(t_f)
    return ScenarioReport(
        scenario=scenario_id,
        setup=setup,
        geometry=geometry,
        avg_concurrence=float(simpson(conc, x=times) / t_f),
        series=series,
        propagator=analyze_propagator(u_final, n_samples, seed),
        energy=float(energy),
        hbar=float(hbar),
    )


@dataclass
class SummaryRow:
    scenario: str
    avg_concurrence: float
    avg_entanglement_speed: float
    yukalov_quadratic: float
    yukalov_quartic: float


@dataclass
class SummaryTable:
    rows: dict
    orderings: dict

    @property
    def all_hold(self):
        return all(self.orderings.values())


def _faster_growth(p, q, tol=1e-6):
    # compare (t², t⁴) coefficients lexicographically
    if abs(p.yukalov_quadratic - q.yukalov_quadratic) > tol:
        return p.yukalov_quadratic > q.yukalov_quadratic
    return p.yukalov_quartic > q.yukalov_quartic


def summary_table(n_steps=1024):
    """Averaged entanglement characteristics of the four |00> scenarios and their orderings."""
    rows = {}
    for sid in SCENARIOS[:4]:
        setup = scenario_setup(sid)
        times, conc = concurrence_series(setup.hamiltonian, setup.A, setup.travel_time, n_steps)
        q2, q4 = yukalov_short_time(setup.hamiltonian)
        rows[sid] = SummaryRow(
            scenario=sid,
            avg_concurrence=float(simpson(conc, x=times) / setup.travel_time),
            avg_entanglement_speed=float(abs(conc[-1] - conc[0]) / setup.travel_time),
            yukalov_quadratic=q2,
            yukalov_quartic=q4,
        )
    on, sn = rows["opt-nonortho"], rows["subopt-nonortho"]
    oo, so = rows["opt-ortho"], rows["subopt-ortho"]
    orderings = {
        "nonortho: C̄ optimal < suboptimal": on.avg_concurrence < sn.avg_concurrence,
        "ortho: C̄ optimal < suboptimal": oo.avg_concurrence < so.avg_concurrence,
        "nonortho: v̄_C optimal > suboptimal": on.avg_entanglement_speed > sn.avg_entanglement_speed,
        "ortho: v̄_C optimal > suboptimal": oo.avg_entanglement_speed > so.avg_entanglement_speed,
        "nonortho: Yukalov growth optimal > suboptimal": _faster_growth(on, sn),
        "ortho: Yukalov growth suboptimal > optimal": _faster_growth(so, oo),
    }
    return SummaryTable(rows=rows, orderings=orderings)


def write_series_csv(series, path, time_unit=1.0):
    """Write ``t,concurrence,yukalov[,zanardi]`` rows with 12 significant digits."""
    header = ["t", "concurrence", "yukalov"]
    cols = [np.asarray(series.times) / time_unit, series.concurrence, series.yukalov]
    if series.zanardi is not None:
        header.append("zanardi")
        cols.append(series.zanardi)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in zip(*cols):
            w.writerow(["%.12g" % x for x in row])
