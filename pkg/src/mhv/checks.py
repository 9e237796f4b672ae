"""Exhaustive and randomized consistency checks shared by the test-suite and ``mhv verify``.

Each check returns a :class:`CheckResult` holding the number of cases run and
rendered counterexamples (empty when the check passes).
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .liealg.algebra import C, L, Generator, as_element, bracket, bracket_gens, jacobi_defect, window_generators
from .liealg.automorphism import AutomorphismSpec, apply_automorphism
from .liealg.whittaker import derive_phi_prime
from .modops.decomposition import decomposition_target, h_monomials, pi_map
from .modops.modules import (CharacterModule, InducedModule, LiftModule, OmegaModule,
                             SugawaraModule, TensorModule, TwistedModule)
from .modops.vectors import Vector, add_into
from .uea import (DEFAULT_ORDER, engine, render_element, render_monomial, rewrite_normal_form,
                  splitting_order)

MAX_COUNTEREXAMPLES = 20


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    counterexamples: list = field(default_factory=list)
    failures: int = 0

    def fail(self, text):
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(text)

    @property
    def ok(self):
        return self.failures == 0

    def merge(self, other):
        self.cases += other.cases
        self.failures += other.failures
        room = MAX_COUNTEREXAMPLES - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:max(room, 0)])
        return self


# -- the Lie algebra -----------------------------------------------------------

def lie_axioms(K):
    """Antisymmetry and the Jacobi identity for all generators with ``|index| <= K``."""
    res = CheckResult(f"lie-axioms(K={K})")
    gens = window_generators(K)
    for x, y in itertools.product(gens, repeat=2):
        res.cases += 1
        if bracket(x, y) + bracket(y, x):
            res.fail(f"[{x},{y}] + [{y},{x}] != 0")
    for x, y, z in itertools.product(gens, repeat=3):
        res.cases += 1
        defect = jacobi_defect(x, y, z)
        if defect:
            res.fail(f"Jacobi defect at ({x},{y},{z}): {defect}")
    return res


def theta_homomorphism(specs, K):
    """``theta([x, y]) = [theta x, theta y]`` and ``theta^-1 theta = id`` on the window."""
    res = CheckResult(f"theta(K={K})")
    gens = window_generators(K)
    for spec in specs:
        inv = spec.negated()
        for x in gens:
            res.cases += 1
            if apply_automorphism(inv, apply_automorphism(spec, x)) != as_element(x):
                res.fail(f"theta^-1 theta({x}) != {x} for a={dict(spec.coeffs)}")
        for x, y in itertools.combinations(gens, 2):
            res.cases += 1
            lhs = apply_automorphism(spec, bracket(x, y))
            rhs = bracket(apply_automorphism(spec, x), apply_automorphism(spec, y))
            if lhs != rhs:
                res.fail(f"theta not a homomorphism on ({x},{y}) for a={dict(spec.coeffs)}")
    return res


# -- the enveloping algebra ----------------------------------------------------

def _random_generator(rng, K):
    kind = rng.choice("dddhhhcl")
    if kind == "d":
        return Generator("d", rng.randint(-K, K))
    if kind == "h":
        return Generator("h", 2 * rng.randint(-K, K - 1) + 1)
    return C if kind == "c" else L


def _random_orders(sub_choices):
    return [DEFAULT_ORDER] + [splitting_order(s) for s in sub_choices]


def pbw_confluence(rng, cases, K=4, max_len=6, subs=()):
    """Memoised normal ordering agrees with leftmost and rightmost literal rewriting."""
    res = CheckResult("pbw-confluence")
    orders = _random_orders(subs)
    for _ in range(cases):
        order = rng.choice(orders)
        word = tuple(_random_generator(rng, K) for _ in range(rng.randint(1, max_len)))
        res.cases += 1
        nf = engine(order).normal_form(word)
        for strategy in ("leftmost", "rightmost"):
            other, _ = rewrite_normal_form(word, order, strategy)
            if other != nf:
                res.fail(f"{render_monomial(word, '')}: engine and {strategy} rewriting differ")
                break
    return res


def _random_element(rng, K, terms=2, max_len=3):
    out = {}
    for _ in range(rng.randint(1, terms)):
        word = tuple(_random_generator(rng, K) for _ in range(rng.randint(0, max_len)))
        for mono, c in engine().normal_form(word).items():
            add_into(out, mono, c * rng.randint(-3, 3))
    return out


def pbw_associativity(rng, cases, K=3):
    """``(a b) c = a (b c)`` for random elements of U(D)."""
    res = CheckResult("pbw-associativity")
    eng = engine()
    for _ in range(cases):
        a, b, c = (_random_element(rng, K) for _ in range(3))
        res.cases += 1
        if eng.multiply(eng.multiply(a, b), c) != eng.multiply(a, eng.multiply(b, c)):
            res.fail(f"({render_element(a)})({render_element(b)})({render_element(c)})")
    return res


# -- modules -------------------------------------------------------------------

def _complement_generators(module, K):
    return [g for g in window_generators(K)
            if not g.is_central and module.is_complement(g)]


def basis_keys(module, max_degree, K):
    """Basis keys of degree <= ``max_degree`` built from generators with ``|index| <= K``."""
    if isinstance(module, OmegaModule):
        return list(range(max_degree + 1))
    if isinstance(module, CharacterModule):
        return [()]
    if isinstance(module, SugawaraModule):
        return basis_keys(module.inner, max_degree, K)
    if isinstance(module, (LiftModule, TwistedModule)):
        return basis_keys(module.inner, max_degree, K)
    if isinstance(module, InducedModule):
        gens = sorted(_complement_generators(module, K), key=module.order.key)
        out = []
        for k in range(max_degree + 1):
            out.extend(itertools.combinations_with_replacement(gens, k))
        return out
    if isinstance(module, TensorModule):
        left = basis_keys(module.left, max_degree, K)
        right = basis_keys(module.right, max_degree, K)
        return [(a, b) for a in left for b in right
                if key_degree(module.left, a) + key_degree(module.right, b) <= max_degree]
    raise TypeError(f"no basis enumeration for {module!r}")


def key_degree(module, key):
    if isinstance(module, OmegaModule):
        return key
    if isinstance(module, TensorModule):
        return key_degree(module.left, key[0]) + key_degree(module.right, key[1])
    return len(key)


def module_axioms(module, K, max_degree):
    """``[x, y] v = x (y v) - y (x v)`` for window generators and low-degree basis vectors."""
    res = CheckResult(f"module-axioms({module!r})")
    gens = [g for g in window_generators(K) if module.accepts(g)]
    keys = basis_keys(module, max_degree, K)
    for key in keys:
        v = module.basis(key)
        images = {g: module.act(g, v) for g in gens}
        for x, y in itertools.combinations(gens, 2):
            if x.is_central and y.is_central:
                continue
            res.cases += 1
            lhs = module.act(x, images[y]) - module.act(y, images[x])
            rhs = module.zero()
            for g, c in bracket_gens(x, y):
                rhs = rhs + (images[g] if g in images else module.act(g, v)) * c
            if lhs != rhs:
                res.fail(f"[{x},{y}] on {v.render()} in {module!r}")
    return res


def whittaker_property(module, K):
    """``x w = phi(x) w`` for every window generator of the inducing subalgebra."""
    res = CheckResult(f"whittaker-property({module!r})")
    phi = module.phi
    w = module.vacuum()
    for g in window_generators(K):
        if not phi.domain.contains(g) or not module.accepts(g):
            continue
        res.cases += 1
        if module.act(g, w) != w * phi.value(g):
            res.fail(f"{g} w != phi({g}) w")
    return res


def sugawara_test_vectors(module):
    keys = [(), (Generator("h", -1),), (Generator("h", -3), Generator("h", -1))]
    return [module.basis(k) for k in keys]


def sugawara_relations(module, M=3, R2=5):
    """Virasoro relations (central charge 1) and ``[d_m, h_r] = -r h_{m+r}`` for Sugawara operators."""
    res = CheckResult(f"sugawara-relations({module!r})")
    dm = {m: Generator("d", m) for m in range(-2 * M, 2 * M + 1)}
    for v in sugawara_test_vectors(module):
        for m in range(-M, M + 1):
            for n in range(-M, M + 1):
                res.cases += 1
                lhs = module.act(dm[m], module.act(dm[n], v)) - module.act(dm[n], module.act(dm[m], v))
                rhs = module.act(dm[m + n], v) * (m - n)
                if m + n == 0:
                    rhs = rhs + v * Fraction(m ** 3 - m, 12)
                if lhs != rhs:
                    res.fail(f"[d_{m}, d_{n}] on {v.render()}")
            for t in range(-R2, R2 + 1, 2):
                res.cases += 1
                hr = Generator("h", t)
                lhs = module.act(dm[m], module.act(hr, v)) - module.act(hr, module.act(dm[m], v))
                rhs = module.act(Generator("h", 2 * m + t), v) * Fraction(-t, 2)
                if lhs != rhs:
                    res.fail(f"[d_{m}, {hr}] on {v.render()}")
    return res


def sugawara_ground_shift(module):
    """``d_0 w = (1/l) sum_{k>0} phi(h_k) h_{-k} w + w/16``."""
    res = CheckResult("sugawara-ground-shift")
    phi = module.phi
    expected = {(): Fraction(1, 16)}
    for g in phi.support():
        add_into(expected, (Generator("h", -g.idx),), phi.value(g) / phi.l_value)
    res.cases = 1
    got = module.act(Generator("d", 0), module.vacuum())
    if got != Vector._raw(module, expected):
        res.fail(f"d_0 w = {got.render()}")
    return res


def pi_equivariance(module, max_degree=3, R2=7, extra_d=3):
    """``pi(x v) = x pi(v)`` for ``h_r`` (``|r| <= R2/2``) and ``d_n`` (``m <= n <= m+extra_d``)."""
    phi = module.phi
    res = CheckResult(f"pi-equivariance({module!r})")
    target = decomposition_target(phi)
    gens = [Generator("h", t) for t in range(-R2, R2 + 1, 2)]
    gens += [Generator("d", n) for n in range(phi.m, phi.m + extra_d + 1)]
    for key in h_monomials(max_degree, R2):
        v = module.basis(key)
        pv = pi_map(v, target)
        for g in gens:
            res.cases += 1
            if pi_map(module.act(g, v), target) != target.act(g, pv):
                res.fail(f"pi({g} . {v.render()}) != {g} . pi({v.render()})")
    return res


def criterion_consistency(phi):
    """The D-criterion for ``l != 0`` equals the Virasoro criterion on ``phi'``."""
    from .analysis.criteria import criterion_virasoro_whittaker, criterion_whittaker_D
    res = CheckResult("criterion-consistency")
    if phi.m >= 1 and phi.l_value:
        res.cases = 1
        if criterion_whittaker_D(phi) != criterion_virasoro_whittaker(derive_phi_prime(phi)):
            res.fail(f"criteria disagree for {phi!r}")
    return res


def omega_identities(module, K):
    """``h_r 1 = beta lambda^r`` and ``a_{m+r} = lambda^m a_r``."""
    res = CheckResult(f"omega-identities({module!r})")
    one = module.vacuum()
    vals = {}
    for t in range(-2 * K + 1, 2 * K, 2):
        vals[t] = module.act(Generator("h", t), one).coeff(0) if module.accepts(Generator("h", t)) else 0
        res.cases += 1
        if vals[t] != module.beta * module.lam_pow_half(t):
            res.fail(f"h_{t}/2 . 1 != beta lambda^r")
    for m in range(-K, K + 1):
        for t in vals:
            if t + 2 * m in vals:
                res.cases += 1
                if vals[t + 2 * m] != module.lam ** m * vals[t]:
                    res.fail(f"a_(m+r) != lambda^m a_r at m={m}, 2r={t}")
    return res


def omega_closure(module, K, max_degree=5):
    """``t C[t]`` is closed: ``g . t^j`` has no constant term for ``1 <= j <= max_degree``."""
    res = CheckResult(f"omega-closure({module!r})")
    for j in range(1, max_degree + 1):
        v = module.basis(j)
        for g in window_generators(K):
            if not module.accepts(g):
                continue
            res.cases += 1
            if module.act(g, v).coeff(0):
                res.fail(f"{g} . t^{j} has a constant term")
    return res


def default_theta_specs():
    return [AutomorphismSpec({0: 1}), AutomorphismSpec({1: 2, -1: Fraction(1, 3)}),
            AutomorphismSpec({-2: -1, 0: Fraction(1, 2), 2: 3})]
