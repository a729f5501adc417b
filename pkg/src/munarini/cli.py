"""Command line: ``munarini {gen,poly,verify,census,export}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields

from . import graphs as gr
from . import hypercube_analysis as ha
from . import polynomials as pl
from . import verify as vf
from .errors import ConsistencyError, InputError, UnsupportedParameterError

DEFAULT_MAX_VERTICES = 10**6
MAX_VERTICES_ENV = "MUNARINI_MAX_VERTICES"

COMMANDS = ("gen", "poly", "verify", "census", "export")
FORMATS = ("text", "csv", "json", "dot", "edgelist")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    command: str
    family: str = "munarini"
    n: int = 0
    k: int = 1
    order: int | None = None
    format: str = "text"
    output: str | None = None
    which: str | None = None
    n_max: int | None = None
    k_max: int | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.n < 0 or self.k < 1:
            raise UsageError(f"need n >= 0 and k >= 1, got n={self.n}, k={self.k}")
        if self.order is not None and self.order < 0:
            raise UsageError("series order must be >= 0")
        if self.command in ("gen", "census", "export") or (self.command == "verify" and self.n_max is None):
            try:
                gr.FamilyParams(self.family, self.n, self.k)
            except (InputError, UnsupportedParameterError) as exc:
                raise UsageError(str(exc)) from exc


def vertex_cap() -> int:
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_VERTICES_ENV} must be an integer, got {raw!r}") from None


def _guard(family: str, n: int, k: int) -> None:
    size = gr.expected_order(family, n, k)
    cap = vertex_cap()
    if size > cap:
        raise UsageError(
            f"{family}(n={n}, k={k}) has {size} vertices, above the cap of {cap} "
            f"(raise it with {MAX_VERTICES_ENV})")


def _build(cfg: CommandConfig) -> gr.LabeledGraph:
    _guard(cfg.family, cfg.n, cfg.k)
    return gr.build(cfg.family, cfg.n, cfg.k)


# ---------------------------------------------------------------------------
# commands; each returns (text, exit code)

def cmd_gen(cfg: CommandConfig) -> tuple[str, int]:
    G = _build(cfg)
    fmt = cfg.format
    if fmt == "json":
        return gr.to_json(G), 0
    if fmt == "dot":
        return gr.to_dot(G), 0
    if fmt in ("edgelist", "text"):
        return gr.to_edgelist(G), 0
    raise UsageError(f"gen does not support format {fmt!r}")


def _poly_value(which: str, n: int, k: int):
    if which == "weight":
        return pl.weight_poly(n, k)
    if which == "cube":
        return pl.cube_poly(n, k)
    if which == "dcube":
        return pl.distance_cube_poly(n, k)
    if which == "maxcube":
        return pl.maximal_cube_poly(n, k)
    if which == "qnum":
        return pl.cube_number(n, k)
    raise UsageError(f"unknown polynomial {which!r}")


def _poly_rows(which: str, n: int, k: int, value) -> list[list[int]]:
    if which == "qnum":
        return [[n, k, value]]
    if which == "dcube":
        return [[n, k, i, j, c] for (i, j), c in sorted(value.terms.items())]
    return [[n, k, e, c] for e, c in enumerate(value.coeffs) if c]


def cmd_poly(cfg: CommandConfig) -> tuple[str, int]:
    which = cfg.which or "weight"
    if which == "maxcube" and cfg.k < 2:
        raise UsageError("maximal cube polynomial needs k >= 2")
    ns = range(cfg.order + 1) if cfg.order is not None else [cfg.n]
    values = [(n, _poly_value(which, n, cfg.k)) for n in ns]
    if cfg.format == "csv":
        head = "n,k,x_exponent,q_exponent,coefficient" if which == "dcube" else (
            "n,k,cube_number" if which == "qnum" else "n,k,exponent,coefficient")
        rows = [head] + [",".join(map(str, r)) for n, v in values for r in _poly_rows(which, n, cfg.k, v)]
        return "\n".join(rows) + "\n", 0
    if cfg.format == "json":
        data = [{"n": n, "k": cfg.k, "value": str(v)} for n, v in values]
        return json.dumps(data) + "\n", 0
    if which == "qnum" and cfg.order is not None:
        return " ".join(str(v) for _, v in values) + "\n", 0
    return "".join(f"{v}\n" for _, v in values), 0


def cmd_verify(cfg: CommandConfig) -> tuple[str, int]:
    suite = cfg.which or "all"
    if suite not in vf.SUITES + ("all",):
        raise UsageError(f"unknown suite {suite!r}")
    if cfg.n_max is not None or cfg.k_max is not None:
        n_max = cfg.n_max if cfg.n_max is not None else cfg.n
        k_max = cfg.k_max if cfg.k_max is not None else cfg.k
        if k_max < 1 or n_max < 0:
            raise UsageError("need --n-max >= 0 and --k-max >= 1")
        _guard("munarini", n_max, k_max)
        checks = list(vf.run(suite, n_max, k_max))
    else:
        _guard(cfg.family, cfg.n, cfg.k)
        checks = list(vf.instance_checks(suite, cfg.family, cfg.n, cfg.k))
    failed = sum(not c.ok for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", 1 if failed else 0


def _embedded(cfg: CommandConfig) -> ha.EmbeddedGraph:
    return ha.embed(_build(cfg))


def cmd_census(cfg: CommandConfig) -> tuple[str, int]:
    which = cfg.which or "cubes"
    E = _embedded(cfg)
    if which == "cubes":
        cubes = ha.enumerate_cubes(E)
    elif which == "maxcubes":
        cubes = ha.enumerate_maximal_cubes(E)
    elif which == "dcubes":
        census = ha.distance_cube_census(E)
        return "p,d,count\n" + ha.census_csv(census), 0
    else:
        raise UsageError(f"unknown census {which!r}")
    if cfg.format == "json":
        return json.dumps([c.to_record(E) for c in cubes]) + "\n", 0
    return "p,count\n" + ha.census_csv(ha.cube_census(cubes)), 0


def cmd_export(cfg: CommandConfig) -> tuple[str, int]:
    """Graph with its hypercube labeling, or the full cube dump."""
    E = _embedded(cfg)
    if (cfg.which or "embedding") == "cubes":
        return json.dumps([c.to_record(E) for c in ha.enumerate_cubes(E)]) + "\n", 0
    data = gr.to_dict(E.graph)
    data["m"] = E.m
    data["labels"] = [E.label_text(v) for v in range(E.graph.order())]
    return json.dumps(data, separators=(",", ":")) + "\n", 0


_DISPATCH = {
    "gen": cmd_gen,
    "poly": cmd_poly,
    "verify": cmd_verify,
    "census": cmd_census,
    "export": cmd_export,
}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=gr.FAMILIES, default=None)
    common.add_argument("-n", type=int, default=None, help="dimension / string length")
    common.add_argument("-k", type=int, default=None, help="arity parameter")
    common.add_argument("-N", "--order", type=int, default=None, help="series order")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    common.add_argument("--config", default=None, help="JSON file with CommandConfig fields")

    parser = argparse.ArgumentParser(prog="munarini", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="write a graph")
    p = sub.add_parser("poly", parents=[common], help="print a polynomial or cube numbers")
    p.add_argument("which", nargs="?", choices=("weight", "cube", "dcube", "maxcube", "qnum"))
    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("which", nargs="?", choices=vf.SUITES + ("all",))
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--k-max", type=int, default=None)
    c = sub.add_parser("census", parents=[common], help="brute-force cube census")
    c.add_argument("which", nargs="?", choices=("cubes", "maxcubes", "dcubes"))
    e = sub.add_parser("export", parents=[common], help="graph with its hypercube labels, or cube dump")
    e.add_argument("which", nargs="?", choices=("embedding", "cubes"))
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    base: dict = {}
    if args.config:
        try:
            with open(args.config) as fh:
                base = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        known = {f.name for f in fields(CommandConfig)}
        unknown = set(base) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
    base["command"] = args.command
    for name in ("family", "n", "k", "order", "format", "output", "which", "n_max", "k_max"):
        value = getattr(args, name, None)
        if value is not None:
            base[name] = value
    if "format" not in base:
        base["format"] = {"gen": "edgelist", "census": "csv"}.get(args.command, "text")
    return CommandConfig(**base)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(args)
        cfg.validate()
        text, code = _DISPATCH[cfg.command](cfg)
    except (UsageError, InputError, UnsupportedParameterError) as exc:
        print(f"munarini: error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"munarini: consistency failure: {exc}", file=sys.stderr)
        return 1
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
