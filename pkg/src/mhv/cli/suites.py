"""Verification suites run by ``mhv verify``.

Each suite returns a JSON-ready dict with at least ``type``, ``passed``,
``failed`` and ``counterexamples``; nothing in it depends on wall-clock time.
"""
import random
from fractions import Fraction

from .. import checks
from ..analysis import concordance
from ..analysis.criteria import iso_predicate_omega, iso_predicate_tensor
from ..analysis.probe import CYCLIC, INCONCLUSIVE, PROPER, probe_submodule
from ..errors import MHVError
from ..liealg.algebra import Dmn, Hm, Vm, window_generators
from ..liealg.scalars import as_scalar
from ..modops.modules import InducedModule, OmegaModule, SugawaraModule, TensorModule
from ..liealg.whittaker import WhittakerFunctionD
from .seedexpr import parse_seed


def suite_rng(seed, index):
    return random.Random(f"{0 if seed is None else seed}:{index}")


def _result(kind, index, results, **extra):
    out = {"type": kind, "index": index,
           "passed": sum(r.cases - r.failures for r in results),
           "failed": sum(r.failures for r in results),
           "counterexamples": [c for r in results for c in r.counterexamples],
           "checks": [{"name": r.name, "cases": r.cases, "failed": r.failures} for r in results]}
    out.update(extra)
    return out


def _d_modules(cfg, names, predicate):
    names = names if names is not None else list(cfg.modules)
    return [(n, cfg.modules[n]) for n in names if predicate(cfg.modules[n])]


def run_axioms(cfg, suite, index, rng):
    K = suite.get("window", 3)
    deg = suite.get("max_degree", 3)
    cases = suite.get("random_cases", 200)
    results = [checks.lie_axioms(K),
               checks.theta_homomorphism(checks.default_theta_specs(), K),
               checks.pbw_confluence(rng, cases, subs=[Dmn(1, 0), Dmn(2, 0), Hm(0), Vm(1)]),
               checks.pbw_associativity(rng, cases)]
    for _, module in _d_modules(cfg, suite.get("modules"), lambda m: True):
        results.append(checks.module_axioms(module, K, deg))
        if isinstance(module, InducedModule):
            results.append(checks.whittaker_property(module, K))
        if isinstance(module, OmegaModule):
            results.append(checks.omega_identities(module, K))
    return _result("axioms", index, results)


def run_sugawara(cfg, suite, index, rng):
    module = cfg.modules[suite["module"]]
    if not isinstance(module, SugawaraModule):
        bad = checks.CheckResult("sugawara")
        bad.fail(f"{suite['module']} is not a Sugawara module")
        return _result("sugawara", index, [bad])
    M = suite.get("window", 3)
    return _result("sugawara", index, [checks.sugawara_relations(module, M),
                                       checks.sugawara_ground_shift(module)])


def _is_decomposable(m):
    return (isinstance(m, InducedModule) and isinstance(m.phi, WhittakerFunctionD)
            and bool(m.phi.l_value))


def run_decomposition(cfg, suite, index, rng):
    deg = suite.get("max_degree", 3)
    results = []
    for _, module in _d_modules(cfg, suite.get("modules"), _is_decomposable):
        results.append(checks.pi_equivariance(module, deg))
        results.append(checks.criterion_consistency(module.phi))
    return _result("decomposition", index, results)


def run_criteria_grid(cfg, suite, index, rng):
    grid = cfg.grid
    fams = suite.get("families", ["whittakerD", "omega", "tensor"])
    rows = []
    if "whittakerD" in fams:
        slots = [as_scalar(x) for x in grid["slots"]]
        ls = [as_scalar(x) for x in grid["l"]]
        for phi in concordance.whittaker_grid(grid["m"], slots, ls):
            rows.append(concordance.whittaker_row(phi, cfg.caps, rng))
    pairs = [(as_scalar(a), as_scalar(b)) for a, b in grid["alpha_beta"]]
    lambdas = [as_scalar(x) for x in grid["lambda0"]]
    if "omega" in fams:
        for om in concordance.omega_grid(lambdas, pairs):
            rows.append(concordance.omega_row(om, cfg.caps))
    if "tensor" in fams:
        for om in concordance.omega_grid(lambdas, pairs):
            for phi in concordance.tensor_phis():
                rows.append(concordance.tensor_row(om, phi, cfg.caps, rng))
    bad = [r for r in rows if not r.concordant]
    return {"type": "criteria-grid", "index": index, "passed": len(rows) - len(bad),
            "failed": len(bad),
            "counterexamples": [f"{r.family} {r.params}: {r.evidence}" for r in bad],
            "rows": [r.to_json() for r in rows]}


def run_probe(cfg, suite, index, rng):
    module = cfg.modules[suite["module"]]
    seed = parse_seed(suite["seed"], module)
    out = probe_submodule(module, seed, cfg.caps)
    expect = suite.get("expect")
    ok = out.verdict != INCONCLUSIVE and (expect is None or out.verdict == expect)
    counter = []
    if not ok:
        counter = [f"{suite['module']}: probe from {seed.render()} returned {out.verdict}"]
        if out.verdict == PROPER:
            counter += [v.render() for v in out.witness_basis[:16]]
    return {"type": "probe", "index": index, "module": suite["module"], "seed": seed.render(),
            "passed": int(ok), "failed": int(not ok), "counterexamples": counter,
            "outcome": out.to_json()}


def _omega_actions_agree(o1, o2, K, max_degree=3):
    for j in range(max_degree + 1):
        for g in window_generators(K):
            if o1.accepts(g) != o2.accepts(g):
                return False
            if o1.accepts(g) and o1.act_key(g, j) != o2.act_key(g, j):
                return False
    return True


def run_iso(cfg, suite, index, rng):
    res = checks.CheckResult("iso")
    for a, b, expected in suite.get("pairs", []):
        m1, m2 = cfg.modules[a], cfg.modules[b]
        res.cases += 1
        try:
            if isinstance(m1, OmegaModule) and isinstance(m2, OmegaModule):
                got = iso_predicate_omega(m1, m2)
                if got and not _omega_actions_agree(m1, m2, cfg.caps.index_window):
                    res.fail(f"{a} ~ {b} but the actions differ")
            elif (isinstance(m1, TensorModule) and isinstance(m2, TensorModule)
                  and all(isinstance(t.left, OmegaModule) and isinstance(t.right, InducedModule)
                          for t in (m1, m2))):
                got = iso_predicate_tensor(m1.left, m1.right.phi, m2.left, m2.right.phi)
            else:
                res.fail(f"{a}, {b}: no isomorphism predicate for these module types")
                continue
        except MHVError as exc:
            res.fail(f"{a}, {b}: {type(exc).__name__}: {exc}")
            continue
        if got != expected:
            res.fail(f"{a} ~ {b} is {got}, expected {expected}")
    return _result("iso", index, [res], note="Whittaker factors compared by (m, phi) equality")


RUNNERS = {
    "axioms": run_axioms,
    "sugawara": run_sugawara,
    "decomposition": run_decomposition,
    "criteria-grid": run_criteria_grid,
    "probe": run_probe,
    "iso": run_iso,
}


def run_one(cfg, index, seed):
    suite = cfg.suites[index]
    try:
        return RUNNERS[suite["type"]](cfg, suite, index, suite_rng(seed, index))
    except MHVError as exc:
        return {"type": suite["type"], "index": index, "passed": 0, "failed": 1,
                "counterexamples": [f"{type(exc).__name__}: {exc}"]}
