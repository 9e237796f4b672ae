from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import small_rationals
from mhv.checks import (module_axioms, omega_closure, omega_identities, pi_equivariance,
                        sugawara_ground_shift, sugawara_relations, whittaker_property)
from mhv.errors import BasisKeyError, NotInHSpan, NotRestricted, OutsideDomain
from mhv.liealg import (C, L, AutomorphismSpec, Dmn, WhittakerFunctionD, WhittakerFunctionH,
                        WhittakerFunctionV, d, h)
from mhv.modops import (CharacterModule, OmegaModule, SugawaraModule, decomposition_target,
                        h_monomials, lift_trivial_H, pi_map, restricted_bound, sugawara_act,
                        tensor, twist_module, whittaker_module)

D1 = WhittakerFunctionD.make(1, {1: 3, 2: 5}, {"1/2": 2}, 0, 7)


def key(*gens):
    return tuple(gens)


# -- Omega ---------------------------------------------------------------------

def test_omega_examples():
    om = OmegaModule(2, 1, 3)
    t = om.basis(1)
    assert om.act(d(1), t) == om.vector({2: 4, 1: 8, 0: 4})
    assert om.act(h("1/2"), om.vacuum()) == om.vacuum() * 6
    assert om.act(C, t) == 0 and om.act(L, t) == 0
    assert om.basis(2).render() == "t^2"
    with pytest.raises(BasisKeyError):
        om.basis(-1)


def test_omega_negative_index():
    # d_{-1} t = lambda^{-1} (t - alpha)(t - 1)
    om = OmegaModule(1, 2, 0)
    assert om.act(d(-1), om.basis(1)) == om.vector({2: 1, 1: -3, 0: 2})
    # h_{-1/2} 1 = beta lambda0^{-1}
    om = OmegaModule(2, 0, 1)
    assert om.act(h("-1/2"), om.vacuum()) == om.vacuum() * F(1, 2)


def test_virasoro_only_omega_rejects_h():
    om = OmegaModule(1, 1, virasoro_only=True)
    with pytest.raises(OutsideDomain):
        om.act(h("1/2"), om.vacuum())
    assert not om.accepts(L)


@given(small_rationals.filter(bool), small_rationals, small_rationals)
def test_omega_identities_hold(l0, alpha, beta):
    assert omega_identities(OmegaModule(l0, alpha, beta), 2).ok


def test_omega_closure_of_t():
    assert omega_closure(OmegaModule(1), 3, max_degree=3).ok
    assert omega_closure(OmegaModule(F(2, 3)), 3, max_degree=3).ok


# -- induced modules -------------------------------------------------------------

def test_induced_examples():
    W = whittaker_module(D1)
    v = W.basis(key(d(0)))
    assert W.act(d(1), v) == W.basis(key(d(0))) * 3 + W.vacuum() * 3
    assert W.act(h("1/2"), v) == W.basis(key(d(0))) * 2 + W.vacuum() * 1
    assert W.act(L, W.vacuum()) == W.vacuum() * 7
    assert W.act(d(3), W.vacuum()) == 0


def test_induced_basis_key_errors():
    W = whittaker_module(D1)
    with pytest.raises(BasisKeyError, match="lies in"):
        W.basis(key(d(1)))
    with pytest.raises(BasisKeyError, match="normal order"):
        W.basis(key(d(0), h("-1/2")))
    H = whittaker_module(WhittakerFunctionH.make({"1/2": 1}, 1))
    with pytest.raises(OutsideDomain):
        H.act(d(0), H.vacuum())


def test_induced_vector_render():
    W = whittaker_module(D1)
    v = W.basis(key(h("-1/2"), d(0))) * F(1, 2) - W.vacuum()
    assert v.render() == "-1*w + 1/2*h(-1/2) * d(0) * w"


def test_whittaker_property_on_vacuum():
    assert whittaker_property(whittaker_module(D1), 4).ok
    V = whittaker_module(WhittakerFunctionV.make(1, {1: 1, 2: 2}, 3))
    assert whittaker_property(V, 4).ok


# -- Sugawara --------------------------------------------------------------------

def test_sugawara_examples():
    S = SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 1))
    w = S.vacuum()
    assert sugawara_act(S, 0, w) == S.basis(key(h("-1/2"))) + w * F(1, 16)
    assert S.act(d(1), w) == w * F(1, 2)
    assert S.act(C, w) == w
    mu = 3
    S = SugawaraModule(WhittakerFunctionH.make({"1/2": mu}, 1))
    expect = S.basis(key(h("-3/2"))) * mu + S.basis(key(h("-1/2"), h("-1/2"))) * F(1, 2)
    assert sugawara_act(S, -1, S.vacuum()) == expect
    S = SugawaraModule(WhittakerFunctionH.make({}, 1))
    assert sugawara_act(S, 5, S.vacuum()) == 0


def test_sugawara_requires_nonzero_l():
    with pytest.raises(ValueError):
        SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 0))


@pytest.mark.parametrize("hv,l", [({"1/2": 1}, 1), ({"1/2": 2, "3/2": -1}, 3)])
def test_sugawara_relations(hv, l):
    S = SugawaraModule(WhittakerFunctionH.make(hv, l))
    assert sugawara_relations(S, M=2, R2=3).ok
    assert sugawara_ground_shift(S).ok


# -- restricted bound ---------------------------------------------------------------

def test_restricted_bound_examples():
    W = whittaker_module(WhittakerFunctionD.make(1, {1: 1}))
    assert restricted_bound(W, W.vacuum()) == 2
    S = SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 1))
    assert restricted_bound(S, S.vacuum()) == 2
    with pytest.raises(NotRestricted):
        restricted_bound(OmegaModule(1, 0, 1), OmegaModule(1, 0, 1).vacuum())
    assert restricted_bound(W, W.zero()) == 0


@st.composite
def induced_vectors(draw):
    m = draw(st.integers(1, 2))
    dv = {k: draw(st.integers(0, 2)) for k in range(m, 2 * m + 1)}
    hv = {F(2 * j + 1, 2): draw(st.integers(0, 2)) for j in range(m)}
    W = whittaker_module(WhittakerFunctionD.make(m, dv, hv, 0, draw(st.integers(0, 1))))
    gens = [g for g in (d(-1), d(0), h("-1/2"), h("-3/2")) if W.is_complement(g)]
    mono = W.order.sort(draw(st.lists(st.sampled_from(gens), max_size=3)))
    return W, W.basis(mono)


@given(induced_vectors())
def test_restricted_bound_is_least(wv):
    W, v = wv
    n = restricted_bound(W, v)
    for i in range(n, n + 6):
        assert W.act(d(i), v) == 0 and W.act(h(F(2 * i - 1, 2)), v) == 0
    if n > 0:
        assert W.act(d(n - 1), v) or W.act(h(F(2 * n - 3, 2)), v)


# -- lift, twist, tensor -------------------------------------------------------------

def test_lift_examples():
    V = lift_trivial_H(whittaker_module(WhittakerFunctionV.make(1, {1: 1, 2: 1})))
    w = V.vacuum()
    assert V.act(h("1/2"), w) == 0 and V.act(L, w) == 0
    assert V.act(d(1), w) == w
    om = lift_trivial_H(OmegaModule(2, 1, virasoro_only=True))
    assert om.act(d(1), om.vacuum()) == om.vector({1: 4, 0: 4})


def test_twist_examples():
    W = whittaker_module(D1)
    same = twist_module(W, AutomorphismSpec())
    assert same.act(d(0), same.vacuum()).coords == W.act(d(0), W.vacuum()).coords
    S = SugawaraModule(WhittakerFunctionH.make({"1/2": 2}, 3))
    T = twist_module(S, AutomorphismSpec({0: 1}))
    assert T.act(h("1/2"), T.vacuum()) == T.vacuum() * 5


def test_tensor_examples():
    phi = WhittakerFunctionD.make(1, {1: 2}, {"1/2": 1}, F(1, 3), 0)
    T = tensor(OmegaModule(1, 1, 0), whittaker_module(phi))
    om, W = T.left, T.right
    u = T.pure(om.vacuum(), W.vacuum())
    assert T.act(d(1), u) == T.pure(om.vector({1: 1, 0: 1}), W.vacuum()) + u * 2
    assert T.act(C, u) == u * F(1, 3)
    assert u.render() == "t^0 (x) w"
    T = tensor(OmegaModule(2, 0, 3), whittaker_module(phi))
    v = T.pure(T.left.basis(1), T.right.vacuum())
    # h_{1/2}(t (x) w) = 3*2 (t + 1/2) (x) w + t (x) h_{1/2} w
    expect = (T.pure(T.left.vector({1: 6, 0: 3}), T.right.vacuum())
              + T.pure(T.left.basis(1), T.right.vacuum()))
    assert T.act(h("1/2"), v) == expect


def test_character_module():
    X = CharacterModule(WhittakerFunctionV.make(1, {1: 2, 2: 1}, 5))
    assert X.act(d(2), X.vacuum()) == X.vacuum()
    assert X.act(C, X.vacuum()) == X.vacuum() * 5


# -- module axioms ----------------------------------------------------------------------

MODULES = [
    whittaker_module(D1),
    whittaker_module(WhittakerFunctionD.make(2, {2: 1, 4: 1}, {"1/2": 1, "3/2": 2}, 1, 1)),
    whittaker_module(WhittakerFunctionH.make({"1/2": 1}, 0)),
    SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 1)),
    lift_trivial_H(whittaker_module(WhittakerFunctionV.make(1, {1: 1, 2: 1}, 2))),
    twist_module(whittaker_module(D1), AutomorphismSpec({0: 1, -1: F(1, 2)})),
    OmegaModule(2, 1, 3),
    tensor(OmegaModule(1, 1, 1), whittaker_module(D1)),
]


@pytest.mark.parametrize("module", MODULES, ids=repr)
def test_module_axioms_small_window(module):
    assert module_axioms(module, 2, 2).ok


# -- decomposition -------------------------------------------------------------------------

def test_pi_examples():
    phi = WhittakerFunctionD.make(1, {1: 1}, {"1/2": 1}, 0, 1)
    W = whittaker_module(phi)
    target = decomposition_target(phi)
    img = pi_map(W.vacuum(), target)
    assert list(img.keys()) == [((), ())]
    sq = pi_map(W.basis(key(h("-1/2"), h("-1/2"))), target)
    assert list(sq.keys()) == [((h("-1/2"), h("-1/2")), ())]
    with pytest.raises(NotInHSpan):
        pi_map(W.basis(key(d(0))), target)


def test_h_monomials():
    monos = h_monomials(2, 3)
    assert monos[0] == ()
    assert len(monos) == 1 + 2 + 3
    assert all(len(m) <= 2 for m in monos)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_pi_is_equivariant(m):
    dv = {k: 1 for k in range(m, 2 * m + 1)}
    hv = {F(2 * j + 1, 2): 1 for j in range(m)}
    phi = WhittakerFunctionD.make(m, dv, hv, 2, 1)
    assert pi_equivariance(whittaker_module(phi), max_degree=2, R2=5, extra_d=2).ok
