"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 a law check found a
counterexample (printed in canonical syntax).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import checks
from .coalgebra import coproduct_lin
from .forest import Alphabets, DecorationError, breadth, count_forests, depth, enumerate_forests, render
from .linear import LinComb, mul
from .operated import MorphismError, forest_target, relabel_assignment, universal_morphism
from .prelie import prelie
from .quiver import Quiver, QuiverError
from .text import (
    ParseError,
    SessionConfig,
    lincomb_to_json,
    parse_forest,
    parse_lincomb,
    serialize_lincomb,
    serialize_specialized,
    serialize_tensor,
    specialized_to_json,
    tensor_to_json,
)

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

DEFAULT_X = ("x", "y")
DEFAULT_OMEGA = ("a", "b")
DEFAULT_CONFIG = "forest.toml"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _names(value: str) -> tuple[str, ...]:
    return tuple(n.strip() for n in value.split(",") if n.strip())


def _rational(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}") from None


def load_config(args) -> SessionConfig:
    """Alphabets from the config file, overridden by ``--x``/``--omega``."""
    X, Omega, mode = DEFAULT_X, DEFAULT_OMEGA, "unicode"
    path = args.config
    if path is None and Path(DEFAULT_CONFIG).is_file():
        path = DEFAULT_CONFIG
    if path is not None:
        try:
            data = tomllib.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise UsageError(f"malformed config {path}: {exc}") from exc
        for key in ("X", "Omega"):
            if key in data and not (
                isinstance(data[key], list) and all(isinstance(n, str) for n in data[key])
            ):
                raise UsageError(f"config key {key} must be a list of names")
        X = tuple(data.get("X", X))
        Omega = tuple(data.get("Omega", Omega))
        mode = data.get("mode", mode)
    if args.x is not None:
        X = _names(args.x)
    if args.omega is not None:
        Omega = _names(args.omega)
    if args.ascii:
        mode = "ascii"
    try:
        return SessionConfig(Alphabets(X, Omega), mode)
    except (DecorationError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(value, cfg: SessionConfig, args) -> None:
    weight = getattr(args, "weight", None)
    is_lin = isinstance(value, LinComb)
    if getattr(args, "json", False):
        if weight is not None:
            data = specialized_to_json(value, weight)
        else:
            data = lincomb_to_json(value) if is_lin else tensor_to_json(value)
        print(json.dumps(data, ensure_ascii=False))
    elif weight is not None:
        print(serialize_specialized(value, weight, cfg))
    else:
        print(serialize_lincomb(value, cfg) if is_lin else serialize_tensor(value, cfg))


def cmd_coproduct(args, cfg):
    _emit(coproduct_lin(parse_lincomb(args.expr, cfg)), cfg, args)
    return EXIT_OK


def cmd_product(args, cfg):
    _emit(mul(parse_lincomb(args.left, cfg), parse_lincomb(args.right, cfg)), cfg, args)
    return EXIT_OK


def cmd_prelie(args, cfg):
    _emit(prelie(parse_lincomb(args.left, cfg), parse_lincomb(args.right, cfg)), cfg, args)
    return EXIT_OK


def cmd_depth(args, cfg):
    print(depth(parse_forest(args.expr, cfg)))
    return EXIT_OK


def cmd_breadth(args, cfg):
    print(breadth(parse_forest(args.expr, cfg)))
    return EXIT_OK


def cmd_eval(args, cfg):
    try:
        sigma = json.loads(Path(args.relabel).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read relabeling {args.relabel}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed relabeling JSON: {exc}") from exc
    if not isinstance(sigma, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in sigma.items()):
        raise UsageError("relabeling must be a JSON object mapping names to names")
    a = cfg.alphabets
    fbar = universal_morphism(relabel_assignment(sigma, a), forest_target(a.Omega), a)
    _emit(fbar(parse_lincomb(args.expr, cfg)), cfg, args)
    return EXIT_OK


def cmd_check(args, cfg):
    if args.max_vertices < 0:
        raise UsageError("--max-vertices must be nonnegative")
    a = cfg.alphabets
    if args.law == "prelie":
        report = checks.check_prelie(
            args.max_vertices, a, samples=args.samples, sample_vertices=args.sample_vertices, seed=args.seed
        )
    else:
        report = checks.LAWS[args.law](args.max_vertices, a)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def cmd_quiver(args, cfg):
    try:
        q = Quiver.load(args.quiver)
    except OSError as exc:
        raise UsageError(f"cannot read quiver {args.quiver}: {exc}") from exc
    if args.max_length < 0:
        raise UsageError("--max-length must be nonnegative")
    status = EXIT_OK
    for report in checks.check_quiver(q, args.max_length):
        print(f"{report.law}: {report.summary()}")
        if not report.ok:
            status = EXIT_COUNTEREXAMPLE
    return status


def cmd_enumerate(args, cfg):
    a = cfg.alphabets
    if args.vertices < 0:
        raise UsageError("--vertices must be nonnegative")
    if args.count_only:
        print(count_forests(args.vertices, len(a.X), len(a.Omega)))
        return EXIT_OK
    for f in enumerate_forests(args.vertices, a):
        print(render(f))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"TOML file declaring X and Omega (default: ./{DEFAULT_CONFIG} if present)")
    common.add_argument("--x", help="comma-separated generator names (overrides the config)")
    common.add_argument("--omega", help="comma-separated operator names (overrides the config)")
    common.add_argument("--ascii", action="store_true", help="ASCII output: 'lambda', '*', '(x)'")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--lambda", dest="weight", type=_rational, help="specialize the weight to a rational")
    output.add_argument("--json", action="store_true", help="print the JSON form")

    parser = _Parser(prog="rtforest", description="Weighted infinitesimal bialgebra of decorated planar forests.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coproduct", parents=[common, output], help="weighted coproduct of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_coproduct)

    for name, func, helptext in (
        ("product", cmd_product, "concatenation product"),
        ("prelie", cmd_prelie, "pre-Lie product a |> b"),
    ):
        p = sub.add_parser(name, parents=[common, output], help=helptext)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(func=func)

    for name, func in (("depth", cmd_depth), ("breadth", cmd_breadth)):
        p = sub.add_parser(name, parents=[common], help=f"{name} of a forest")
        p.add_argument("expr")
        p.set_defaults(func=func)

    p = sub.add_parser("eval", parents=[common, output], help="apply a generator relabeling morphism")
    p.add_argument("--relabel", required=True, help="JSON object mapping X-names to new names")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="exhaustive law verification")
    p.add_argument("law", choices=sorted(checks.LAWS))
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--samples", type=int, default=0, help="extra random triples (prelie only)")
    p.add_argument("--sample-vertices", type=int, default=None, help="size bound for sampled forests")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("quiver", parents=[common], help="path algebra checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("--quiver", required=True, help="edge-list or JSON quiver file")
    p.add_argument("--max-length", type=int, required=True)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("enumerate", parents=[common], help="list the forest basis")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except (UsageError, ParseError, DecorationError, MorphismError, QuiverError, ValueError) as exc:
        print(f"rtforest: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
