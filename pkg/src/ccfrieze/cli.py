"""Command line front end: read a JSON config, compute the frieze, write outputs.

Exit codes: 0 when every mesh passes the frieze check, 2 when some mesh
fails it, 1 on any input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Sequence

from .ccmap import CCContext, FriezeReport, frieze_check, integer_context, original_cc_context
from .emit import emit_dot, emit_json, emit_text_grid, emit_tikz
from .laurent import LaurentRing
from .polygon import Diagonal, PolygonCategory

MODES = ("modified", "original", "integer")
OUTPUTS = ("text", "json", "tikz", "dot", "report")
FILENAMES = {
    "text": "frieze.txt",
    "json": "frieze.json",
    "tikz": "frieze.tex",
    "dot": "ar_quiver.dot",
    "report": "report.txt",
}
SHIPPED = ("a5_figure3.cfg", "a5_figure2.cfg")


class ConfigError(ValueError):
    """Malformed configuration; the message names the offending field."""


@dataclass(frozen=True)
class RunConfig:
    polygon_size: int
    R: tuple[Diagonal, ...]
    T: tuple[Diagonal, ...]
    mode: str = "modified"
    epsilon: dict[Diagonal, str] | str = "auto"
    variables: tuple[str, ...] | None = None
    outputs: tuple[str, ...] = ("text",)


def _diagonals(field: str, raw, model: PolygonCategory) -> tuple[Diagonal, ...]:
    if not isinstance(raw, list):
        raise ConfigError(f"{field}: expected a list of two-element arrays")
    out = []
    for k, item in enumerate(raw):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)):
            raise ConfigError(f"{field}[{k}]: malformed diagonal {json.dumps(item)}")
        try:
            out.append(model.diagonal(*item))
        except ValueError as exc:
            raise ConfigError(f"{field}[{k}]: {exc}") from None
    return tuple(out)


def config_from_dict(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config: expected a JSON object")
    known = {"polygon_size", "R", "T", "mode", "epsilon", "variables", "outputs"}
    extra = sorted(set(doc) - known)
    if extra:
        raise ConfigError(f"{extra[0]}: unknown field")
    for key in ("polygon_size", "T"):
        if key not in doc:
            raise ConfigError(f"{key}: missing")
    m = doc["polygon_size"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 4:
        raise ConfigError(f"polygon_size: expected an integer >= 4, got {m!r}")
    model = PolygonCategory(m)
    T = _diagonals("T", doc["T"], model)
    R = _diagonals("R", doc.get("R", []), model)

    mode = doc.get("mode", "modified")
    if mode not in MODES:
        raise ConfigError(f"mode: unknown mode {mode!r}, expected one of {', '.join(MODES)}")

    raw_eps = doc.get("epsilon", "auto")
    if raw_eps == "auto":
        epsilon: dict[Diagonal, str] | str = "auto"
    elif isinstance(raw_eps, dict):
        epsilon = {}
        for key, val in raw_eps.items():
            try:
                d = model.check(Diagonal.parse(key))
            except ValueError as exc:
                raise ConfigError(f"epsilon[{key!r}]: {exc}") from None
            if not isinstance(val, str):
                raise ConfigError(f"epsilon[{key!r}]: expected a string, got {val!r}")
            epsilon[d] = val
    else:
        raise ConfigError('epsilon: expected "auto" or an object mapping diagonals to monomials')

    variables = doc.get("variables")
    if variables is not None:
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise ConfigError("variables: expected a list of names")
        variables = tuple(variables)

    outputs = doc.get("outputs", ["text"])
    if not isinstance(outputs, list):
        raise ConfigError("outputs: expected a list")
    for o in outputs:
        if o not in OUTPUTS:
            raise ConfigError(f"outputs: unknown output {o!r}")
    return RunConfig(m, R, T, mode, epsilon, variables, tuple(outputs))


def parse_config(path: str | Path) -> RunConfig:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}: JSON syntax error: {exc.msg}") from None
    return config_from_dict(doc)


def _names_in(texts: Sequence[str]) -> list[str]:
    seen: list[str] = []
    for t in texts:
        for name in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", t):
            if name not in seen:
                seen.append(name)
    return seen


def build_context(cfg: RunConfig) -> CCContext:
    """Assemble the context for a config; raises ValueError on invalid data."""
    if cfg.mode == "integer":
        return integer_context(cfg.polygon_size, cfg.R, cfg.T)
    if cfg.mode == "original":
        if cfg.epsilon == "auto":
            return original_cc_context(cfg.polygon_size, cfg.T, cfg.variables)
        return original_cc_context(cfg.polygon_size, cfg.T, cfg.epsilon)
    if cfg.epsilon == "auto":
        return CCContext(cfg.polygon_size, cfg.R, cfg.T, names=cfg.variables)
    order = [cfg.epsilon[t] for t in sorted(cfg.epsilon)]
    ring = LaurentRing(cfg.variables or _names_in(order))
    images = {}
    for d, text in cfg.epsilon.items():
        try:
            images[d] = ring.parse(text)
        except ValueError as exc:
            raise ConfigError(f"epsilon[{str(d)!r}]: {exc}") from None
    return CCContext(cfg.polygon_size, cfg.R, cfg.T, images)


def render(ctx: CCContext, report: FriezeReport, outputs: Sequence[str],
           mode: str) -> dict[str, str]:
    values = ctx.values()
    makers = {
        "text": lambda: emit_text_grid(values, ctx.model),
        "json": lambda: emit_json(values, ctx.model, report, mode),
        "tikz": lambda: emit_tikz(values, ctx.model),
        "dot": lambda: emit_dot(values, ctx.model),
        "report": lambda: report.to_text() + "\n",
    }
    return {o: makers[o]() for o in OUTPUTS if o in outputs}


def run(cfg: RunConfig, out_dir: str | Path | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ctx = build_context(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    report = frieze_check(ctx)
    texts = render(ctx, report, cfg.outputs, cfg.mode)
    if out_dir is None:
        for text in texts.values():
            stdout.write(text)
    else:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for kind, text in texts.items():
            (out / FILENAMES[kind]).write_text(text)
    if not report.passed:
        for r in report.failures():
            print(f"frieze check failed at mesh ending {r.mesh.end}: defect {r.defect}, "
                  f"class {r.classification}", file=stderr)
        return 2
    return 0


def shipped_config(name: str) -> str:
    return resources.files("ccfrieze").joinpath("data", name).read_text()


def seed_examples(out_dir: str | Path) -> list[Path]:
    target = Path(out_dir) / "examples"
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name in SHIPPED:
        path = target / name
        path.write_text(shipped_config(name))
        written.append(path)
    return written


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ccfrieze",
        description="Generalised friezes from the modified Caldero-Chapoton map on polygon diagonals.",
    )
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("--mode", choices=MODES, help="override the mode given in the config")
    p.add_argument("--out", help="directory for output files (default: print to stdout)")
    p.add_argument("--emit", help="comma separated subset of " + ",".join(OUTPUTS))
    p.add_argument("--verify", action="store_true", help="add the mesh report to the outputs")
    p.add_argument("--seed-examples", action="store_true",
                   help="write the shipped example configs to <out>/examples and exit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed_examples:
        for path in seed_examples(args.out or "."):
            print(path)
        return 0
    if not args.config:
        print("error: --config is required", file=sys.stderr)
        return 1
    try:
        cfg = parse_config(args.config)
        if args.mode:
            cfg = replace(cfg, mode=args.mode)
        if args.emit:
            kinds = tuple(k.strip() for k in args.emit.split(",") if k.strip())
            bad = [k for k in kinds if k not in OUTPUTS]
            if bad:
                raise ConfigError(f"--emit: unknown output {bad[0]!r}")
            cfg = replace(cfg, outputs=kinds)
        if args.verify and "report" not in cfg.outputs:
            cfg = replace(cfg, outputs=cfg.outputs + ("report",))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(cfg, args.out)


if __name__ == "__main__":
    sys.exit(main())
