"""Command-line front end: JSON in, JSON out.

Exit status is 0 on success, 1 when the input or options are invalid and 2
when a computation fails numerically; failures print a JSON error object.
"""

import argparse
import csv
import json
import sys

import numpy as np

from . import io
from .checks import SUITES, run_suite
from .circle import compose, identity, sup_distance
from .cocycle import bott_cocycle, cocycle_identity_defect, cover_trivialize, sign_cocycle
from .config import DEFAULT, Config
from .errors import CircleGroupError, NumericalError
from .intervals import uniform_covering
from .localization import build_partition, epsilon_max, localize, slice_factorize
from .moebius import (
    cover_compose,
    cover_make,
    dilation_word,
    generator_matrix,
    iwasawa,
    psl_distance,
    rotation_word,
    to_diffeo,
    ts_word,
    word_matrix,
)
from .words import moebius_word, word_stats

COMMANDS = (
    "localize", "slice", "iwasawa", "ts-word", "dilation-word", "rotation-word",
    "moebius-word", "cover", "cocycle", "bott", "check",
)


class UsageError(Exception):
    pass


def _load(args):
    if args.input is None:
        raise UsageError("--input is required for %s" % args.command)
    try:
        if args.input == "-":
            return json.load(sys.stdin)
        with open(args.input) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (args.input, exc.strerror)) from exc
    except json.JSONDecodeError as exc:
        raise UsageError("invalid JSON in %s: %s" % (args.input, exc)) from exc


def _config(args):
    data = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data.update(json.load(fh))
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (args.config, exc.strerror)) from exc
        except json.JSONDecodeError as exc:
            raise UsageError("invalid JSON in %s: %s" % (args.config, exc)) from exc
    for flag, key in (("tol", "tail_tol"), ("modes", "modes"), ("margin", "margin_fraction"), ("safety", "safety")):
        value = getattr(args, flag)
        if value is not None:
            data[key] = value
    return Config.from_dict({**DEFAULT.to_dict(), **data})


def _partition(args, config):
    cover = uniform_covering(3)
    if args.covering:
        with open(args.covering) as fh:
            cover = io.covering_from_json(json.load(fh))
    return build_partition(cover, config.margin_fraction)


def _diffeo_input(obj, config):
    return io.diffeo_from_json(obj.get("diffeo", obj) if isinstance(obj, dict) else obj, config)


def _dump_grid(path, phi, n=1024):
    x = np.arange(n) * (2 * np.pi / n)
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["x", "phi", "dphi"])
        for row in zip(x, phi(x), phi.derivative(x)):
            out.writerow(["%.17g" % v for v in row])


def _ts_report(word, target):
    return {"word": io.ts_word_to_json(word), "length": len(word),
            "residual": float(np.max(np.abs(word_matrix(word) - target)))}


def cmd_localize(args, config):
    phi = _diffeo_input(_load(args), config)
    p = _partition(args, config)
    w = localize(phi, p, config)
    return {"epsilon_max": epsilon_max(p, config.safety), "word": io.word_to_json(w),
            "stats": word_stats(w, phi, config), "supports_ok": w.supports_ok(config.support_tol)}, phi


def cmd_slice(args, config):
    phi = _diffeo_input(_load(args), config)
    p = _partition(args, config)
    steps = slice_factorize(phi, p, config)
    acc = identity()
    for s in steps:
        acc = compose(s, acc, config)
    return {"epsilon_max": epsilon_max(p, config.safety), "count": len(steps),
            "slices": [io.diffeo_to_json(s) for s in steps], "residual": sup_distance(acc, phi)}, phi


def cmd_iwasawa(args, config):
    g = io.moebius_from_json(_load(args))
    co = iwasawa(g)
    return {"iwasawa": io.iwasawa_to_json(co), "residual": g.distance(co.element())}, None


def cmd_ts_word(args, config):
    g = io.moebius_from_json(_load(args))
    word = ts_word(g)
    # T/S words live in SL(2,R); compare up to sign
    return {"word": io.ts_word_to_json(word), "length": len(word),
            "residual": psl_distance(word_matrix(word), g.matrix)}, None


def cmd_dilation_word(args, config):
    if args.tau is None:
        raise UsageError("--tau is required")
    return _ts_report(dilation_word(args.tau), generator_matrix("D", args.tau)), None


def cmd_rotation_word(args, config):
    if args.alpha is None:
        raise UsageError("--alpha is required")
    return _ts_report(rotation_word(args.alpha), generator_matrix("R", args.alpha)), None


def cmd_moebius_word(args, config):
    g = io.moebius_from_json(_load(args))
    p = _partition(args, config)
    w = moebius_word(g, p, args.step, args.step, config)
    target = to_diffeo(g, config)
    report = {"ts_word": io.ts_word_to_json(ts_word(g)), "stats": word_stats(w, target, config)}
    if args.emit_word:
        report["word"] = io.word_to_json(w)
    return report, target


def cmd_cover(args, config):
    obj = _load(args)
    items = obj if isinstance(obj, list) else [obj]
    elements = []
    for item in items:
        if isinstance(item, dict) and "lift0" not in item:
            elements.append(cover_make(io.moebius_from_json(item), int(item.get("branch", 0))))
        else:
            elements.append(io.cover_from_json(item))
    a = elements[0]
    for b in elements[1:]:
        a = cover_compose(a, b)
    return {"cover": io.cover_to_json(a), "trivialization": cover_trivialize(a).tolist()}, None


def cmd_cocycle(args, config):
    obj = _load(args)
    if not isinstance(obj, list) or len(obj) < 2:
        raise UsageError("cocycle input must be a list of at least two moebius elements")
    gs = [io.moebius_from_json(o) for o in obj]
    table = [[sign_cocycle(g, h) for h in gs] for g in gs]
    report = {"table": table}
    if len(gs) >= 3:
        report["identity_defect"] = cocycle_identity_defect(sign_cocycle, *gs[:3])
    return report, None


def cmd_bott(args, config):
    obj = _load(args)
    if not isinstance(obj, list) or len(obj) < 2:
        raise UsageError("bott input must be a list of at least two diffeos")
    phis = [io.diffeo_from_json(o, config) for o in obj]
    report = {"value": bott_cocycle(phis[0], phis[1])}
    if len(phis) >= 3:
        report["identity_defect"] = cocycle_identity_defect(bott_cocycle, *phis[:3], additive=True)
    return report, phis[0]


def cmd_check(args, config):
    results = run_suite(args.suite, args.seed, config)
    return {"suite": args.suite, "seed": args.seed, "results": results,
            "passed": all(r["passed"] for r in results)}, None


def build_parser():
    ap = argparse.ArgumentParser(prog="circlegroup", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", help="input JSON file ('-' for stdin)")
    ap.add_argument("--output", help="write the JSON report here instead of stdout")
    ap.add_argument("--config", help="JSON file of config overrides")
    ap.add_argument("--covering", help="covering JSON for localize, slice and moebius-word")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--suite", default="all", choices=("all",) + SUITES)
    ap.add_argument("--tol", type=float, help="refit tail tolerance")
    ap.add_argument("--modes", type=int, help="starting harmonic count")
    ap.add_argument("--margin", type=float, help="partition margin fraction")
    ap.add_argument("--safety", type=float, help="neighborhood safety factor")
    ap.add_argument("--step", type=float, help="T and S step for stepped words")
    ap.add_argument("--tau", type=float)
    ap.add_argument("--alpha", type=float)
    ap.add_argument("--emit-word", action="store_true", help="include the full localized word")
    ap.add_argument("--grid-csv", help="dump x, phi(x), phi'(x) at 1024 points")
    return ap


def _emit(report, path):
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = globals()["cmd_" + args.command.replace("-", "_")]
    try:
        config = _config(args)
        report, diffeo = handler(args, config)
    except NumericalError as exc:
        _emit({"schema_version": io.SCHEMA_VERSION, "error": {"type": type(exc).__name__, "message": str(exc)}}, None)
        return 2
    except (UsageError, CircleGroupError, ValueError, TypeError, KeyError, OSError) as exc:
        _emit({"schema_version": io.SCHEMA_VERSION, "error": {"type": type(exc).__name__, "message": str(exc)}}, None)
        return 1
    if args.grid_csv and diffeo is not None:
        _dump_grid(args.grid_csv, diffeo)
    report.update({"schema_version": io.SCHEMA_VERSION, "command": args.command, "config": config.to_dict()})
    _emit(report, args.output)
    # a failing property suite is a numerical failure, but the report is still written
    return 0 if report.get("passed", True) else 2


if __name__ == "__main__":
    sys.exit(main())
