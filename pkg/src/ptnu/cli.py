"""Batch command-line interface: spectrum tables, wavefunction samples,
cross-verification sweeps, and the small-range limit scan.

All numeric output is deterministic for a given configuration; csv/tsv/json
carry the same formatted values and diagnostics go to stderr only.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace

from .errors import ConfigError, PtnuError
from .oracle import discretize, lowest_eigenvalues, richardson
from .poschl_teller import (
    PtPotential,
    alpha_zero_limit,
    energy_closed_form,
    energy_via_nu,
    normalized_wavefunction,
    spectrum_table,
)

DEFAULT_ALPHAS = (1.2, 0.8, 0.4, 0.2, 0.02, 0.002)
ORACLE_BAND = 1e-4
ORACLE_ALPHA_MIN = 0.4
FORMATS = ("csv", "tsv", "json")


@dataclass(frozen=True)
class RunConfig:
    m: float = 10.0
    v1: float = 5.0
    v2: float = 3.0
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    n_max: int = 6
    grid_points: int = 2000
    tol: float = 1e-9
    format: str = "csv"
    precision: int = 8

    def validate(self) -> "RunConfig":
        if not (self.m > 0 and self.v1 > 0 and self.v2 > 0):
            raise ConfigError(f"m, v1, v2 must be positive, got {self.m}, {self.v1}, {self.v2}")
        if not self.alphas or any(a <= 0 for a in self.alphas):
            raise ConfigError(f"alphas must be a non-empty list of positive values, got {self.alphas}")
        if self.n_max < 0:
            raise ConfigError(f"nmax must be >= 0, got {self.n_max}")
        if self.tol <= 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.format!r}")
        if not (1 <= self.precision <= 17):
            raise ConfigError(f"precision must be in [1, 17], got {self.precision}")
        return self


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _fmt_dev(value: float, precision: int) -> str:
    return f"{value:.{precision}e}"


def _emit(out, header: list[str], rows: list[list], fmt: str) -> None:
    """Write one rectangular table; cells are pre-formatted strings or None.

    In csv/tsv a None cell prints as `skipped`; in json it becomes null.
    Formatted numeric strings pass through as raw json numbers, so every
    format carries byte-identical values.
    """
    if fmt == "json":
        lines = []
        for row in rows:
            fields = []
            for key, cell in zip(header, row):
                if cell is None:
                    token = "null"
                elif isinstance(cell, str) and _is_number(cell):
                    token = cell
                else:
                    token = f'"{cell}"'
                fields.append(f'"{key}": {token}')
            lines.append("  {" + ", ".join(fields) + "}")
        out.write("[\n" + ",\n".join(lines) + "\n]\n")
        return
    sep = "," if fmt == "csv" else "\t"
    out.write(sep.join(header) + "\n")
    for row in rows:
        out.write(sep.join("skipped" if cell is None else str(cell) for cell in row) + "\n")


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def cmd_table2(config: RunConfig, out=None) -> int:
    """Spectrum grid: one row per n, one column per alpha."""
    out = out or sys.stdout
    config.validate()
    table = spectrum_table(config.m, config.v1, config.v2, list(config.alphas), config.n_max)
    if config.format == "json":
        rows = [[str(n), str(alpha), _fmt(energy, config.precision)]
                for n, row in enumerate(table)
                for alpha, energy in zip(config.alphas, row)]
        _emit(out, ["n", "alpha", "energy"], rows, "json")
        return 0
    header = ["n"] + [f"alpha={a}" for a in config.alphas]
    rows = [[str(n)] + [_fmt(e, config.precision) for e in row] for n, row in enumerate(table)]
    _emit(out, header, rows, config.format)
    return 0


def cmd_wavefunction(config: RunConfig, n: int, points: int, out=None) -> int:
    """Sample the normalized state n of the first configured alpha:
    columns r, R/r (the radial factor of the full wavefunction), and R."""
    out = out or sys.stdout
    config.validate()
    if not (0 <= n <= config.n_max):
        raise ConfigError(f"need 0 <= n <= nmax={config.n_max}, got n={n}")
    if points < 2:
        raise ConfigError(f"need points >= 2, got {points}")
    p = PtPotential(config.m, config.v1, config.v2, config.alphas[0])
    _, r_fn = normalized_wavefunction(p, n)
    rows = []
    for j in range(points):
        r = p.r_max * (j + 1) / (points + 1)
        radial = float(r_fn(r))
        rows.append([_fmt(r, config.precision),
                     _fmt(radial / r, config.precision),
                     _fmt(radial, config.precision)])
    _emit(out, ["r", "R_over_r", "R"], rows, config.format)
    return 0


def cmd_verify(config: RunConfig, out=None) -> int:
    """Closed form vs template root vs finite-difference oracle per cell.

    The oracle column is populated only for alpha >= 0.4 (uniform grids
    are hopeless on the near-flat wells of smaller alpha); exit 1 when
    any populated deviation leaves its band.
    """
    out = out or sys.stdout
    config.validate()
    if config.grid_points < 1000:
        raise ConfigError(f"verify needs grid_points >= 1000, got {config.grid_points}")
    header = ["n", "alpha", "e_closed", "e_nu", "e_oracle", "nu_dev", "oracle_dev"]
    rows = []
    violated = False
    for alpha in config.alphas:
        p = PtPotential(config.m, config.v1, config.v2, alpha)
        oracle_levels = None
        if alpha >= ORACLE_ALPHA_MIN:
            count = config.n_max + 1
            coarse = lowest_eigenvalues(discretize(p, config.grid_points), count)
            fine = lowest_eigenvalues(discretize(p, 2 * config.grid_points + 1), count)
            oracle_levels = [richardson(c, f) / (2.0 * p.m) for c, f in zip(coarse, fine)]
        for n in range(config.n_max + 1):
            e_closed = energy_closed_form(p, n)
            e_nu = energy_via_nu(p, n)
            nu_dev = abs(e_nu - e_closed) / abs(e_closed)
            if nu_dev > config.tol:
                violated = True
            row = [str(n), str(alpha), _fmt(e_closed, config.precision),
                   _fmt(e_nu, config.precision)]
            if oracle_levels is None:
                row += [None, _fmt_dev(nu_dev, 2), None]
            else:
                e_or = oracle_levels[n]
                oracle_dev = abs(e_or - e_closed) / abs(e_closed)
                if oracle_dev > ORACLE_BAND:
                    violated = True
                row += [_fmt(e_or, config.precision), _fmt_dev(nu_dev, 2),
                        _fmt_dev(oracle_dev, 2)]
            rows.append(row)
    _emit(out, header, rows, config.format)
    return 1 if violated else 0


def cmd_limit(config: RunConfig, out=None) -> int:
    """Ground-state energy against the small-range limit for each alpha."""
    out = out or sys.stdout
    config.validate()
    limit = alpha_zero_limit(PtPotential(config.m, config.v1, config.v2, config.alphas[0]))
    rows = []
    for alpha in config.alphas:
        p = PtPotential(config.m, config.v1, config.v2, alpha)
        energy = energy_closed_form(p, 0)
        rows.append([str(alpha), _fmt(energy, config.precision),
                     _fmt_dev(abs(energy - limit), 6), _fmt(limit, config.precision)])
    _emit(out, ["alpha", "energy", "abs_deviation", "limit"], rows, config.format)
    return 0


_CONFIG_KEYS = {
    "m": float, "v1": float, "v2": float, "alpha": str,
    "nmax": int, "grid_points": int, "tol": float,
    "format": str, "precision": int,
}


def _parse_alphas(raw: str) -> tuple[float, ...]:
    try:
        values = tuple(float(x.strip()) for x in raw.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"bad alpha list {raw!r}: {exc}") from exc
    if not values:
        raise ConfigError(f"bad alpha list {raw!r}: empty")
    return values


def _load_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
                key, _, raw = line.partition("=")
                key = key.strip()
                raw = raw.strip()
                if key not in _CONFIG_KEYS:
                    raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
                try:
                    values[key] = _CONFIG_KEYS[key](raw)
                except ValueError as exc:
                    raise ConfigError(f"{path}:{line_no}: bad value for {key}: {exc}") from exc
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def _build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config is not None:
        file_values = _load_config_file(args.config)
        if "alpha" in file_values:
            file_values["alphas"] = _parse_alphas(file_values.pop("alpha"))
        if "nmax" in file_values:
            file_values["n_max"] = file_values.pop("nmax")
        config = replace(config, **file_values)
    overrides = {}
    for flag, field in (("m", "m"), ("v1", "v1"), ("v2", "v2"), ("nmax", "n_max"),
                        ("grid_points", "grid_points"), ("tol", "tol"),
                        ("format", "format"), ("precision", "precision")):
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    if args.alpha is not None:
        overrides["alphas"] = _parse_alphas(args.alpha)
    return replace(config, **overrides).validate()


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=float, default=None, help="mass (fm^-1)")
    common.add_argument("--v1", type=float, default=None, help="first well depth (fm^-1)")
    common.add_argument("--v2", type=float, default=None, help="second well depth (fm^-1)")
    common.add_argument("--alpha", default=None, metavar="LIST",
                        help="comma-separated range parameters (fm^-1)")
    common.add_argument("--nmax", type=int, default=None, help="highest quantum number")
    common.add_argument("--grid-points", dest="grid_points", type=int, default=None,
                        help="finite-difference interior grid size")
    common.add_argument("--tol", type=float, default=None,
                        help="relative band for the closed-form/root-finder comparison")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--precision", type=int, default=None, help="decimal digits [1, 17]")
    common.add_argument("--config", default=None, metavar="PATH",
                        help="key=value file; flags override its entries")

    parser = argparse.ArgumentParser(
        prog="ptnu",
        description="Bound states of the trigonometric Poschl-Teller well: "
                    "closed-form spectra, wavefunctions, and cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table2", parents=[common],
                   help="energy levels, one row per n and one column per alpha")
    wf = sub.add_parser("wavefunction", parents=[common],
                        help="sample a normalized radial state (first alpha of the list)")
    wf.add_argument("--n", type=int, default=0, help="quantum number of the state")
    wf.add_argument("--points", type=int, default=200, help="number of interior samples")
    sub.add_parser("verify", parents=[common],
                   help="closed form vs template root vs finite-difference oracle")
    sub.add_parser("limit", parents=[common],
                   help="ground-state energy against the small-range limit")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _build_config(args)
        if args.command == "table2":
            return cmd_table2(config)
        if args.command == "wavefunction":
            return cmd_wavefunction(config, args.n, args.points)
        if args.command == "verify":
            return cmd_verify(config)
        return cmd_limit(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PtnuError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
