"""Command line front end.

Three subcommands: ``generate`` writes drawing (and point) JSON for a
seeded generator, ``verify`` validates drawings and runs the structural
checks, ``render`` draws a figure.  Exit status: 0 all requested checks
passed, 1 a check failed, 2 validation or parsing failed, 3 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import report as report_mod
from .drawing import GoodDrawing, decode_drawing, encode_drawing, from_geometric
from .errors import DrawingError, NoGeometryError
from .geometry import (
    PointConfiguration,
    decode_configuration,
    encode_configuration,
    generate_convex,
    generate_general,
)
from .render import drawing_figure, save_figure


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    kind: str = "natural"
    n: int | None = None
    seeds: tuple[int, ...] = ()
    checks: tuple[str, ...] = ("all",)
    in_path: str | None = None
    out_path: str | None = None
    points_path: str | None = None
    csv_path: str | None = None
    figures_dir: str | None = None
    shade_faces: bool = False


def _add_common(p: argparse.ArgumentParser, *, checks: bool = False):
    p.add_argument("--kind", choices=("natural", "random", "file"), default="natural",
                   help="input source: a seeded generator or a drawing file")
    p.add_argument("--n", type=int, help="number of vertices (generated kinds)")
    p.add_argument("--seed", type=int, help="generator seed")
    p.add_argument("--seeds", help="inclusive seed range a..b (verify only)")
    p.add_argument("--in", dest="in_path", help="drawing JSON file (kind=file)")
    p.add_argument("--out", dest="out_path", help="output path (default: stdout)")
    if checks:
        p.add_argument("--checks", default="all",
                       help="comma separated subset of t1,t2,t3,segbound,natural,claims, or all")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drawings", description="Simple drawings of complete graphs: generate, verify, render.")
    sub = parser.add_subparsers(dest="command")

    g = sub.add_parser("generate", help="generate a drawing and write it as JSON")
    _add_common(g)
    g.add_argument("--points-out", dest="points_path", help="where to write the point configuration JSON")

    v = sub.add_parser("verify", help="validate drawings and run structural checks")
    _add_common(v, checks=True)
    v.add_argument("--csv", dest="csv_path", help="also write a CSV summary, one row per drawing and check")
    v.add_argument("--figures", dest="figures_dir", help="also render one figure per generated drawing into this directory")

    r = sub.add_parser("render", help="render a drawing to SVG/PNG/PDF")
    _add_common(r)
    r.add_argument("--points", dest="points_path", help="point configuration JSON (kind=file)")
    r.add_argument("--shade-faces", action="store_true", help="fill and label the bounded faces")
    return parser


def _parse_seeds(args) -> tuple[int, ...]:
    if args.seeds is not None and args.seed is not None:
        raise UsageError("give either --seed or --seeds, not both")
    if args.seeds is not None:
        parts = args.seeds.split("..")
        if len(parts) != 2:
            raise UsageError(f"--seeds wants a range a..b, got {args.seeds!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise UsageError(f"--seeds wants integers, got {args.seeds!r}") from None
        if b < a:
            raise UsageError(f"empty seed range {args.seeds!r}")
        return tuple(range(a, b + 1))
    if args.seed is not None:
        return (args.seed,)
    return ()


def parse_args(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    if not args.command:
        raise UsageError("a subcommand is required: generate, verify, or render")
    checks: tuple[str, ...] = ("all",)
    if getattr(args, "checks", None):
        checks = tuple(s.strip() for s in args.checks.split(",") if s.strip())
        for name in checks:
            if name != "all" and name not in report_mod.CHECK_NAMES:
                raise UsageError(f"unknown check {name!r}")
        if not checks:
            raise UsageError("--checks must name at least one check")
    cfg = RunConfig(
        command=args.command,
        kind=args.kind,
        n=args.n,
        seeds=_parse_seeds(args),
        checks=checks,
        in_path=args.in_path,
        out_path=args.out_path,
        points_path=getattr(args, "points_path", None),
        csv_path=getattr(args, "csv_path", None),
        figures_dir=getattr(args, "figures_dir", None),
        shade_faces=getattr(args, "shade_faces", False),
    )
    return cfg


def _require_generated(cfg: RunConfig, command: str) -> None:
    if cfg.kind == "file":
        raise UsageError(f"{command} --kind file makes no sense; pass a generated kind")
    if cfg.n is None:
        raise UsageError("--n is required for generated kinds")
    if cfg.n < 3:
        raise UsageError(f"--n must be at least 3, got {cfg.n}")
    if not cfg.seeds:
        raise UsageError("a seed is required for generated kinds (--seed or --seeds)")


def _generate_configuration(kind: str, n: int, seed: int) -> PointConfiguration:
    if kind == "natural":
        return generate_convex(n, seed)
    return generate_general(n, seed)


def _write(path: str | None, data: bytes) -> None:
    if path is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def cmd_generate(cfg: RunConfig) -> int:
    _require_generated(cfg, "generate")
    if len(cfg.seeds) != 1:
        raise UsageError("generate takes a single --seed")
    pc = _generate_configuration(cfg.kind, cfg.n, cfg.seeds[0])
    d = from_geometric(pc)
    _write(cfg.out_path, encode_drawing(d))
    points_path = cfg.points_path
    if points_path is None and cfg.out_path is not None:
        root, ext = os.path.splitext(cfg.out_path)
        points_path = f"{root}.points{ext or '.json'}"
    if points_path is not None:
        _write(points_path, encode_configuration(pc))
    return 0


def _load_drawings(cfg: RunConfig) -> tuple[list[tuple[dict, GoodDrawing]], dict[int, PointConfiguration]]:
    drawings: list[tuple[dict, GoodDrawing]] = []
    configs: dict[int, PointConfiguration] = {}
    if cfg.kind == "file":
        if not cfg.in_path:
            raise UsageError("--in is required with --kind file")
        with open(cfg.in_path, "rb") as fh:
            d = decode_drawing(fh.read())
        drawings.append(({"input": cfg.in_path}, d))
    else:
        _require_generated(cfg, "verify")
        for seed in cfg.seeds:
            pc = _generate_configuration(cfg.kind, cfg.n, seed)
            configs[seed] = pc
            drawings.append(({"seed": seed}, from_geometric(pc)))
    return drawings, configs


def cmd_verify(cfg: RunConfig) -> int:
    drawings, configs = _load_drawings(cfg)
    rep = report_mod.verify_batch(drawings, cfg.checks, cfg.kind)
    _write(cfg.out_path, rep.to_bytes())
    if cfg.csv_path:
        report_mod.write_csv(rep, cfg.csv_path)
    if cfg.figures_dir:
        if cfg.kind == "file":
            raise NoGeometryError("--figures needs generated drawings with coordinates")
        os.makedirs(cfg.figures_dir, exist_ok=True)
        for (meta, d) in drawings:
            seed = meta["seed"]
            fig, _ = drawing_figure(configs[seed], d)
            save_figure(fig, os.path.join(cfg.figures_dir, f"{cfg.kind}-n{cfg.n}-s{seed}.svg"))
    return rep.exit_status


def cmd_render(cfg: RunConfig) -> int:
    if cfg.out_path is None:
        raise UsageError("render needs --out")
    if cfg.kind == "file":
        if not cfg.points_path:
            raise NoGeometryError("a combinatorial drawing has no coordinates; pass --points")
        with open(cfg.points_path, "rb") as fh:
            pc = decode_configuration(fh.read())
        d = decode_drawing(open(cfg.in_path, "rb").read()) if cfg.in_path else None
    else:
        _require_generated(cfg, "render")
        if len(cfg.seeds) != 1:
            raise UsageError("render takes a single --seed")
        pc = _generate_configuration(cfg.kind, cfg.n, cfg.seeds[0])
        d = None
    fig, info = drawing_figure(pc, d, shade_faces=cfg.shade_faces)
    save_figure(fig, cfg.out_path)
    print(f"wrote {cfg.out_path} (n={info['vertices']}, crossings={info['crossings']})", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
        if cfg.command == "generate":
            return cmd_generate(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "render":
            return cmd_render(cfg)
        raise UsageError(f"unknown command {cfg.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    except DrawingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
