"""``mhv`` command line: ``verify``, ``probe`` and ``criteria``."""
import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from ..analysis.criteria import (criterion_omega, criterion_tensor,
                                 criterion_virasoro_whittaker, criterion_whittaker_D,
                                 criterion_whittaker_H)
from ..analysis.probe import probe_submodule
from ..errors import ConfigError, MHVError
from ..liealg.whittaker import WhittakerFunctionD, WhittakerFunctionH, WhittakerFunctionV
from ..modops.modules import (InducedModule, LiftModule, OmegaModule, SugawaraModule,
                              TensorModule, TwistedModule)
from .config import load_config
from .report import build_report, dumps, emit_report, summary
from .seedexpr import parse_seed
from .suites import run_one


def _worker(args):
    path, index, seed = args
    cfg = load_config(path)
    t = time.perf_counter()
    res = run_one(cfg, index, seed)
    return res, time.perf_counter() - t


def verify(path, out=None, jobs=1, seed=None):
    """Run every suite of the config; returns ``(report, timings)``."""
    cfg = load_config(path)
    seed = seed if seed is not None else cfg.seed
    tasks = [(path, i, seed) for i in range(len(cfg.suites))]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_worker, tasks))
    else:
        done = []
        for _, i, s in tasks:
            t = time.perf_counter()
            done.append((run_one(cfg, i, s), time.perf_counter() - t))
    report = build_report([r for r, _ in done], seed)
    return report, [t for _, t in done], out or cfg.out


def criteria_table(cfg):
    out = {}
    for name, module in cfg.modules.items():
        try:
            out[name] = _criterion(module)
        except MHVError as exc:
            out[name] = f"{type(exc).__name__}: {exc}"
    return out


def _criterion(module):
    if isinstance(module, (LiftModule, TwistedModule)):
        return _criterion(module.inner)
    if isinstance(module, OmegaModule):
        return criterion_omega(module)
    if isinstance(module, SugawaraModule):
        return criterion_whittaker_H(module.phi)
    if isinstance(module, InducedModule):
        phi = module.phi
        if isinstance(phi, WhittakerFunctionD):
            return criterion_whittaker_D(phi)
        if isinstance(phi, WhittakerFunctionH):
            return criterion_whittaker_H(phi)
        if isinstance(phi, WhittakerFunctionV):
            return criterion_virasoro_whittaker(phi)
    if (isinstance(module, TensorModule) and isinstance(module.left, OmegaModule)
            and isinstance(module.right, InducedModule)
            and isinstance(module.right.phi, WhittakerFunctionD)):
        return criterion_tensor(module.left, module.right.phi)
    return None


def build_parser():
    p = argparse.ArgumentParser(prog="mhv", description="Exact checks for modules over the "
                                "mirror Heisenberg-Virasoro algebra.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the suites of a config and write a JSON report")
    v.add_argument("--config", required=True)
    v.add_argument("--out", help="report path (default: config 'out' or stdout)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int)
    pr = sub.add_parser("probe", help="probe the submodule generated by a seed vector")
    pr.add_argument("--config", required=True)
    pr.add_argument("--module", required=True)
    pr.add_argument("--seed-expr", required=True)
    c = sub.add_parser("criteria", help="evaluate the irreducibility criterion of each module")
    c.add_argument("--config", required=True)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.jobs < 1:
                raise ConfigError("--jobs must be >= 1")
            report, timings, out = verify(args.config, args.out, args.jobs, args.seed)
            emit_report(report, out)
            print(summary(report, timings), file=sys.stderr)
            return 0 if report["verdict"] == "pass" else 1
        cfg = load_config(args.config)
        if args.command == "probe":
            if args.module not in cfg.modules:
                raise ConfigError(f"unknown module {args.module!r}")
            module = cfg.modules[args.module]
            seed = parse_seed(args.seed_expr, module)
            outcome = probe_submodule(module, seed, cfg.caps)
            print(dumps(outcome.to_json()))
            return 0
        print(dumps(criteria_table(cfg)))
        return 0
    except (MHVError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"mhv: error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"mhv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
