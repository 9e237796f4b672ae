"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Everything is exact rational arithmetic.  Run alone with
``pytest tests/test_acceptance.py -v``.
"""
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction as F
from pathlib import Path

import pytest

from mhv.analysis import (CYCLIC, DEFAULT_CAPS, INCONCLUSIVE, PROPER, designated_seed,
                          extract_tensor_leader, generate_omega_line, probe_submodule, replay,
                          tensor_components)
from mhv.analysis.concordance import omega_grid, whittaker_grid, whittaker_row
from mhv.checks import (criterion_consistency, lie_axioms, module_axioms, omega_closure,
                        pbw_associativity, pbw_confluence, pi_equivariance, sugawara_relations)
from mhv.liealg import (AutomorphismSpec, WhittakerFunctionD, WhittakerFunctionH,
                        WhittakerFunctionV, d, h)
from mhv.modops import (CharacterModule, OmegaModule, SugawaraModule, lift_trivial_H, tensor,
                        twist_module, whittaker_module)

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def gate(capsys):
    @contextmanager
    def run(number, title):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            with capsys.disabled():
                print(f"\n[acceptance {number}] {status}: {title} "
                      f"({time.perf_counter() - start:.1f}s)")
    return run


def test_1_lie_axioms(gate):
    with gate(1, "antisymmetry and Jacobi on all generators with |index| <= 6"):
        res = lie_axioms(6)
        assert res.ok, res.counterexamples
        assert res.cases > 20000


def test_2_sugawara_relations(gate):
    with gate(2, "Sugawara operators satisfy the Virasoro and mixed relations"):
        S = SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 1))
        res = sugawara_relations(S, M=3, R2=7)
        assert res.ok, res.counterexamples
        w = S.vacuum()
        lhs = (S.act(d(2), S.act(d(-2), w)) - S.act(d(-2), S.act(d(2), w))
               - S.act(d(0), w) * 4)
        assert lhs == w * F(1, 2)


def _decomposition_grid():
    out = []
    for m in (0, 1, 2):
        for top in (0, 1, 2):
            dv = {k: 1 for k in range(m, 2 * m + 1)}
            dv[2 * m] = top
            hv = {F(2 * j + 1, 2): j + 1 for j in range(m)}
            out.append(WhittakerFunctionD.make(m, dv, hv, 1, 1))
    return out


def test_3_decomposition(gate):
    with gate(3, "pi commutes with h_r and d_n on h-monomials of degree <= 3"):
        for phi in _decomposition_grid():
            res = pi_equivariance(whittaker_module(phi), max_degree=3, R2=7, extra_d=3)
            assert res.ok, res.counterexamples
            if phi.m >= 1:
                assert criterion_consistency(phi).ok


def test_4_whittaker_concordance(gate):
    with gate(4, "Whittaker criterion agrees with witnesses and cyclicity on the grid"):
        rng = random.Random("acceptance-4")
        rows = [whittaker_row(phi, DEFAULT_CAPS, rng)
                for phi in whittaker_grid([1, 2], [0, 1, 2], [0, 1])]
        assert len(rows) == 108
        bad = [r.to_json() for r in rows if not r.concordant or r.evidence == INCONCLUSIVE]
        assert not bad, bad
        for r in rows:
            if not r.criterion:
                assert r.evidence == PROPER


def test_5_omega(gate):
    with gate(5, "t C[t] is closed in Omega(lambda,0,0); t generates otherwise"):
        for l0 in (1, 2, F(1, 2)):
            res = omega_closure(OmegaModule(l0), 6, max_degree=5)
            assert res.ok, res.counterexamples
        for om in omega_grid([1, 2], [(0, 1), (1, 0), (1, 1), (-1, 1), (1, -1)]):
            out = probe_submodule(om, om.basis(1), DEFAULT_CAPS)
            assert out.verdict == CYCLIC, om
            assert replay(om, om.basis(1), out.combination) == om.vacuum()


def _random_tensor(T, rng, s):
    keys = [(), (h("-1/2"),), (d(0),), (d(-1),), (h("-1/2"), d(0))]
    coords = {}
    for i in range(s + 1):
        for k in rng.sample(keys, rng.randint(1, 3)):
            coords[(i, k)] = F(rng.randint(-5, 5) or 1, rng.randint(1, 4))
    return T.vector(coords)


def test_6_tensor_machinery(gate):
    with gate(6, "tensor leader extraction, t^j lines, and the alpha=beta=0 witness"):
        rng = random.Random("acceptance-6")
        phi = WhittakerFunctionD.make(1, {1: 1, 2: 1}, {"1/2": 1}, 0, 1)
        W = whittaker_module(phi)
        for alpha, beta in [(1, 1), (-1, 1), (1, -1), (-1, -1)]:
            T = tensor(OmegaModule(2, alpha, beta), W)
            for s in range(4):
                for _ in range(3):
                    v = _random_tensor(T, rng, s)
                    top = tensor_components(v)[s]
                    lead, combo = extract_tensor_leader(v, record=True)
                    assert lead == T.pure(T.left.vacuum(), top)
                    assert replay(T, v, combo) == lead
            base = T.pure(T.left.vacuum(), W.basis((h("-1/2"),)))
            vectors, combos = generate_omega_line(T, base, 5)
            for j, (vec, combo) in enumerate(zip(vectors, combos)):
                want = T.pure(T.left.basis(j), W.basis((h("-1/2"),)))
                assert vec == want
                assert replay(T, base, [(c, w) for w, c in combo.items()]) == want
        T = tensor(OmegaModule(1), W)
        seed = designated_seed(T)
        assert seed == T.pure(T.left.basis(1), W.vacuum())
        out = probe_submodule(T, seed, DEFAULT_CAPS)
        assert out.verdict == PROPER and out.certified


def _realized_modules():
    phi1 = WhittakerFunctionD.make(1, {1: 1, 2: 2}, {"1/2": 1}, 1, 1)
    phi2 = WhittakerFunctionD.make(2, {2: 1, 3: 1, 4: 1}, {"1/2": 1, "3/2": 2}, 1, 0)
    psi = WhittakerFunctionV.make(1, {1: 1, 2: 1}, 2)
    return [
        whittaker_module(phi1),
        whittaker_module(phi2),
        whittaker_module(WhittakerFunctionH.make({"1/2": 1}, 0)),
        whittaker_module(psi),
        SugawaraModule(WhittakerFunctionH.make({"1/2": 1, "3/2": 1}, 2)),
        lift_trivial_H(whittaker_module(psi)),
        lift_trivial_H(CharacterModule(psi)),
        twist_module(whittaker_module(phi1), AutomorphismSpec({0: 1, -1: F(1, 2)})),
        OmegaModule(2, 1, 3),
        OmegaModule(1, 1, virasoro_only=True),
        tensor(OmegaModule(1, 1, 1), whittaker_module(phi1)),
    ]


def test_7_pbw_and_module_axioms(gate):
    with gate(7, "PBW confluence/associativity and module axioms on every module family"):
        rng = random.Random("acceptance-7")
        res = pbw_confluence(rng, 200)
        assert res.ok and res.cases >= 200, res.counterexamples
        res = pbw_associativity(rng, 200)
        assert res.ok and res.cases >= 200, res.counterexamples
        for module in _realized_modules():
            res = module_axioms(module, 3, 3)
            assert res.ok, (module, res.counterexamples)


def test_8_cli_determinism(gate):
    with gate(8, "two mhv verify runs on the default config are byte-identical"):
        cmd = [sys.executable, "-m", "mhv.cli", "verify", "--config",
               str(ROOT / "configs" / "default.json")]
        runs = [subprocess.run(cmd, capture_output=True, cwd=ROOT) for _ in range(2)]
        assert all(r.returncode == 0 for r in runs), runs[0].stderr.decode()
        assert runs[0].stdout == runs[1].stdout
        assert runs[0].stdout.startswith(b'{"seed":0,"suites":[')
