"""CLI front-end: emits spectra, wavefunctions, comparisons, smoothing studies,
and momentum densities as reproducible CSV or JSON tables.

Every table carries the full run configuration (as ``#`` header lines in CSV,
as a ``config`` object in JSON) and identical configurations produce
byte-identical files.  Numbers are written with 12 significant digits.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.integrate import simpson

from . import bounds as bounds_mod
from . import classical as classical_mod
from . import momentum as momentum_mod
from . import potential as potential_mod
from . import shooting as shooting_mod
from . import spectrum as spectrum_mod
from .potential import Exponential, Linear, WellSpec

__all__ = ["RunConfig", "Table", "cmd_spectrum", "cmd_wavefunction", "cmd_compare",
           "cmd_smoothing", "cmd_momentum", "write_table", "main"]

_DEFAULT_E_MAX = 35.0
_BOUND_MARGIN = 1e-12


@dataclass
class RunConfig:
    """One CLI invocation's worth of physics and output settings."""

    a: float = 3.0
    b: float = 3.0
    v0: float = 20.0
    smoothing: str = "none"             # none | exponential | linear
    delta: float = 0.2
    epsilon: float = 0.4
    e_max: float | None = None
    n_max: int | None = None
    grid: int = 4000
    samples: int = 801                  # wavefunction sampling
    p_max: float | None = None          # momentum range; None picks max(8k, 16)
    points: int | None = None           # momentum samples; None picks 400 per unit
    fmt: str = "csv"                    # csv | json
    out: str = "-"

    def __post_init__(self) -> None:
        if self.smoothing not in ("none", "exponential", "linear"):
            raise ValueError(f"unknown smoothing family {self.smoothing!r}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.fmt!r}")
        if (self.e_max is None) == (self.n_max is None):
            raise ValueError("exactly one of e_max / n_max must be set")
        if self.e_max is not None and not self.e_max > 0:
            raise ValueError(f"e_max must be positive, got {self.e_max}")
        if self.n_max is not None and self.n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {self.n_max}")
        self.well()  # fail fast on bad geometry or smoothing scales

    def well(self) -> WellSpec:
        if self.smoothing == "exponential":
            return WellSpec(self.a, self.b, self.v0, Exponential(self.delta))
        if self.smoothing == "linear":
            return WellSpec(self.a, self.b, self.v0, Linear(self.epsilon))
        return WellSpec(self.a, self.b, self.v0)

    def step_well(self) -> WellSpec:
        return WellSpec(self.a, self.b, self.v0)

    def energy_cap(self) -> float:
        if self.e_max is not None:
            return self.e_max
        width = self.a + self.b
        return (self.n_max * math.pi / width) ** 2 + self.v0 + 1.0


@dataclass
class Table:
    command: str
    config_items: list[tuple[str, object]]
    columns: list[str]
    rows: list[list]
    markers: dict[str, float] = field(default_factory=dict)


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _config_items(config: RunConfig, **extras: object) -> list[tuple[str, object]]:
    items: list[tuple[str, object]] = [
        ("a", config.a), ("b", config.b), ("v0", config.v0),
        ("smoothing", config.smoothing), ("delta", config.delta),
        ("epsilon", config.epsilon), ("e_max", config.e_max),
        ("n_max", config.n_max), ("grid", config.grid), ("format", config.fmt),
    ]
    items.extend(extras.items())
    return items


def _analytic_states(config: RunConfig) -> list[spectrum_mod.EigenState]:
    states = spectrum_mod.find_spectrum(config.step_well(), config.energy_cap())
    if config.n_max is not None:
        if len(states) < config.n_max:
            raise RuntimeError(f"only {len(states)} states found, n_max={config.n_max}")
        states = states[: config.n_max]
    return states


def _bounds_or_none(spec: WellSpec, energy: float):
    if energy > spec.v0 * (1.0 + _BOUND_MARGIN):
        return bounds_mod.bounds_at(spec, energy)
    return None


# ---------------------------------------------------------------- commands


def cmd_spectrum(config: RunConfig) -> Table:
    """Eigenvalue table {n, energy, k, q_or_qbar, branch} for the sharp step."""
    if config.smoothing != "none":
        raise ValueError("the spectrum table is closed-form and requires the sharp "
                         "step; use the smoothing command for smoothed wells")
    states = _analytic_states(config)
    rows = [[st.n, st.energy, st.k, st.q_or_qbar, st.branch] for st in states]
    energies = [st.energy for st in states]
    if any(e2 <= e1 for e1, e2 in zip(energies, energies[1:])):
        raise RuntimeError("emitted energies are not strictly increasing")
    return Table("spectrum", _config_items(config),
                 ["n", "energy", "k", "q_or_qbar", "branch"], rows)


def cmd_wavefunction(config: RunConfig, n: int, n_samples: int | None = None) -> Table:
    """Aligned series {x, psi, density, potential, classical_density} for state n."""
    if n_samples is None:
        n_samples = config.samples
    if n_samples < 5:
        raise ValueError(f"n_samples must be at least 5, got {n_samples}")
    well = config.well()
    xs = np.linspace(-config.a, config.b, n_samples)
    if well.is_step:
        states = _analytic_states(config)
        if n < 1 or n > len(states):
            raise ValueError(f"state n={n} not found below the energy cutoff "
                             f"({len(states)} states available)")
        state = states[n - 1]
        values = spectrum_mod.psi(state, xs)
        energy = state.energy
    else:
        sols = shooting_mod.find_spectrum_numeric(well, config.energy_cap(), config.grid)
        if config.n_max is not None:
            sols = sols[: config.n_max]
        if n < 1 or n > len(sols):
            raise ValueError(f"state n={n} not found below the energy cutoff "
                             f"({len(sols)} states available)")
        sol = sols[n - 1]
        values = np.interp(xs, sol.grid, sol.values)
        energy = sol.energy
    pot = potential_mod.sample(well, xs)
    model = classical_mod.classical_model(config.step_well(), energy)
    cls = classical_mod.classical_density(model, xs)
    dens = values**2

    if abs(values[0]) > 1e-9 or abs(values[-1]) > 1e-9:
        raise RuntimeError("wavefunction does not vanish at the walls")
    h = (config.a + config.b) / (n_samples - 1)
    norm_tol = max(2e-6, (math.sqrt(energy) * h) ** 4)
    if abs(float(simpson(dens, x=xs)) - 1.0) > norm_tol:
        raise RuntimeError("emitted density column is not unit-normalized")

    rows = [[float(x), float(v), float(d), float(p), float(c)]
            for x, v, d, p, c in zip(xs, values, dens, pot, cls)]
    return Table("wavefunction", _config_items(config, n=n, samples=n_samples),
                 ["x", "psi", "density", "potential", "classical_density"], rows)


def cmd_compare(config: RunConfig) -> Table:
    """Per-state table of quantum vs classical left-side probability and bounds."""
    if config.smoothing != "none":
        raise ValueError("the comparison table requires the sharp step")
    spec = config.step_well()
    states = _analytic_states(config)
    rows = []
    for st in states:
        p_left, p_right = spectrum_mod.side_probabilities(st)
        if abs(p_left + p_right - 1.0) > 1e-9:
            raise RuntimeError(f"side probabilities of state {st.n} do not sum to 1")
        model = classical_mod.classical_model(spec, st.energy)
        pair = _bounds_or_none(spec, st.energy)
        if pair is None:
            rows.append([st.n, st.energy, p_left, model.p_left, None, None, None])
        else:
            if not pair.lower - 1e-12 <= model.p_left <= pair.upper + 1e-12:
                raise RuntimeError(f"classical probability escapes the bound envelope "
                                   f"at E={st.energy}")
            if pair.upper - pair.lower < 1e-12:
                kind = None  # v0 ~ 0: the envelopes coincide, nothing to saturate
            else:
                kind = spectrum_mod.classify_matching(st).kind.value
            rows.append([st.n, st.energy, p_left, model.p_left,
                         pair.lower, pair.upper, kind])
    return Table("compare", _config_items(config),
                 ["n", "energy", "p_left_qm", "p_left_cl", "lower_bound",
                  "upper_bound", "match_class"], rows)


def cmd_smoothing(config: RunConfig, delta: float | None = None) -> Table:
    """Sharp-step vs smoothed spectrum and left-side probabilities, state by state.

    The smoothing family follows the configuration (exponential unless
    ``linear`` is selected); a ``delta`` argument overrides the configured
    exponential scale.  Classical values are taken at the sharp-step energies.
    """
    scale = config.delta if delta is None else delta
    if config.smoothing == "linear":
        smooth_well = WellSpec(config.a, config.b, config.v0, Linear(config.epsilon))
        scale = config.epsilon
    else:
        smooth_well = WellSpec(config.a, config.b, config.v0, Exponential(scale))
    step_states = _analytic_states(config)
    cap = config.energy_cap() * 1.05 + config.v0 * scale + 1.0
    smooth_sols = shooting_mod.find_spectrum_numeric(smooth_well, cap, config.grid)
    if len(smooth_sols) < len(step_states):
        raise RuntimeError("smoothed spectrum has fewer states than the sharp step "
                           "below the cutoff; raise the energy cap")
    spec = config.step_well()
    rows = []
    for st, sol in zip(step_states, smooth_sols):
        de = (sol.energy - st.energy) / st.energy
        if abs(de) > 0.5:
            raise RuntimeError(f"implausible smoothing shift {de:.2g} at state {st.n}")
        p_step, _ = spectrum_mod.side_probabilities(st)
        p_smooth = shooting_mod.side_probability_numeric(sol)
        p_cl = classical_mod.classical_model(spec, st.energy).p_left
        rows.append([st.n, st.energy, sol.energy, de, p_step, p_smooth, p_cl])
    return Table("smoothing", _config_items(config, scale=scale),
                 ["n", "e_step", "e_smooth", "de_over_e", "p_left_step",
                  "p_left_smooth", "p_left_cl"], rows)


def cmd_momentum(config: RunConfig, n: int, p_max: float | None = None,
                 n_points: int | None = None) -> Table:
    """Momentum density series {p, density} for state n, with k/q markers."""
    if config.smoothing != "none":
        raise ValueError("momentum densities are computed from the closed-form "
                         "states and require the sharp step")
    states = _analytic_states(config)
    if n < 1 or n > len(states):
        raise ValueError(f"state n={n} not found below the energy cutoff "
                         f"({len(states)} states available)")
    state = states[n - 1]
    if p_max is None:
        p_max = config.p_max
    if n_points is None:
        n_points = config.points
    if p_max is None:
        p_max = max(8.0 * state.k, 16.0)
    if n_points is None:
        n_points = int(2.0 * p_max * 400.0)
        n_points += 1 - (n_points % 2)  # odd count puts a sample exactly at p = 0
    series = momentum_mod.density_series(state, p_max, n_points)

    dens = series.density
    asym = np.max(np.abs(dens - dens[::-1]))
    if asym > 1e-10 * max(1.0, float(np.max(dens))):
        raise RuntimeError("momentum density is not even in p")

    markers = {"k": series.k_marker}
    if series.q_marker is not None:
        markers["q"] = series.q_marker
    rows = [[float(p), float(d)] for p, d in zip(series.p_grid, dens)]
    return Table("momentum", _config_items(config, n=n, p_max=p_max, points=n_points),
                 ["p", "density"], rows, markers=markers)


# ---------------------------------------------------------------- emission


def render_csv(table: Table) -> str:
    lines = [f"# asymwell {table.command}"]
    for key, value in table.config_items:
        lines.append(f"# {key} = {_fmt(value)}")
    for key in sorted(table.markers):
        lines.append(f"# marker {key} = {_fmt(table.markers[key])}")
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(table: Table) -> str:
    def scrub(v):
        return _round12(v) if isinstance(v, float) else v

    doc = {
        "command": table.command,
        "config": {k: scrub(v) for k, v in table.config_items},
        "columns": table.columns,
        "rows": [[scrub(v) for v in row] for row in table.rows],
    }
    if table.markers:
        doc["markers"] = {k: scrub(v) for k, v in table.markers.items()}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_table(table: Table, config: RunConfig) -> None:
    text = render_csv(table) if config.fmt == "csv" else render_json(table)
    if config.out == "-":
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------- CLI


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asymwell",
        description="Bound states, classical comparisons, probability bounds, and "
                    "momentum densities for a hard-walled well with a stepped floor "
                    "(natural units hbar = 2m = 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a", type=float, default=3.0, help="left half-width")
        p.add_argument("--b", type=float, default=3.0, help="right half-width")
        p.add_argument("--v0", type=float, default=20.0, help="step height")
        p.add_argument("--smoothing", choices=["none", "exponential", "linear"],
                       default="none")
        p.add_argument("--delta", type=float, default=0.2,
                       help="sigmoid smoothing scale")
        p.add_argument("--epsilon", type=float, default=0.4,
                       help="linear ramp half-width")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--e-max", type=float, default=None,
                           help="energy cutoff (default 35)")
        group.add_argument("--n-max", type=int, default=None,
                           help="number of states instead of an energy cutoff")
        p.add_argument("--grid", type=int, default=4000,
                       help="cells for the numeric solver")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default="-", help="output path ('-' for stdout)")

    p_spec = sub.add_parser("spectrum", help="eigenvalue table")
    add_common(p_spec)

    p_wave = sub.add_parser("wavefunction", help="sampled state with overlays")
    add_common(p_wave)
    p_wave.add_argument("--n", type=int, required=True, help="state index (1-based)")
    p_wave.add_argument("--samples", type=int, default=801)

    p_cmp = sub.add_parser("compare", help="quantum vs classical probabilities")
    add_common(p_cmp)

    p_sm = sub.add_parser("smoothing", help="sharp step vs smoothed well")
    add_common(p_sm)

    p_mom = sub.add_parser("momentum", help="momentum density series")
    add_common(p_mom)
    p_mom.add_argument("--n", type=int, required=True, help="state index (1-based)")
    p_mom.add_argument("--p-max", type=float, default=None)
    p_mom.add_argument("--points", type=int, default=None)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    e_max = args.e_max
    if e_max is None and args.n_max is None:
        e_max = _DEFAULT_E_MAX
    return RunConfig(a=args.a, b=args.b, v0=args.v0, smoothing=args.smoothing,
                     delta=args.delta, epsilon=args.epsilon, e_max=e_max,
                     n_max=args.n_max, grid=args.grid,
                     samples=getattr(args, "samples", 801),
                     p_max=getattr(args, "p_max", None),
                     points=getattr(args, "points", None),
                     fmt=args.format, out=args.out)


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    stage = "config"
    try:
        config = _config_from_args(args)
        stage = "solve"
        if args.command == "spectrum":
            table = cmd_spectrum(config)
        elif args.command == "wavefunction":
            table = cmd_wavefunction(config, args.n, args.samples)
        elif args.command == "compare":
            table = cmd_compare(config)
        elif args.command == "smoothing":
            table = cmd_smoothing(config)
        else:
            table = cmd_momentum(config, args.n, args.p_max, args.points)
        stage = "emit"
        write_table(table, config)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"asymwell {args.command}: {stage}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
