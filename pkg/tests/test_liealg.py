from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import small_rationals
from mhv.errors import (OutsideDomain, ScalarParseError, Singular, SupportViolation,
                        WhittakerViolation, WrongCase, ZeroCentralCharge)
from mhv.liealg import (C, FULL, HEISENBERG, L, AutomorphismSpec, Dmn, DmInf, Generator, Hm,
                        LieElement, RawFunctional, Vm, WhittakerFunctionD, WhittakerFunctionH,
                        WhittakerFunctionV, apply_automorphism, as_scalar, bracket, d,
                        derive_phi_prime, h, h2, jacobi_defect, normalize_whittaker,
                        parse_scalar, render_scalar, solve_twist_coefficients, twist_whittaker,
                        validate_whittaker, window_generators)
from mhv.liealg.algebra import as_element


def lie(terms):
    return LieElement(terms)


# -- scalars -------------------------------------------------------------------

def test_scalar_parsing():
    assert parse_scalar("3/6") == F(1, 2)
    assert parse_scalar(" -4 ") == -4
    assert as_scalar(7) == 7
    assert render_scalar(F(-6, 4)) == "-3/2"


@pytest.mark.parametrize("bad", ["0.5", "1/0", "i", "", "1e3", 0.5, True])
def test_scalar_rejects_inexact(bad):
    with pytest.raises(ScalarParseError):
        as_scalar(bad)


@given(small_rationals)
def test_scalar_render_round_trip(x):
    assert parse_scalar(render_scalar(x)) == x


def test_half_indices_are_stored_twice():
    assert h("-3/2") == Generator("h", -3)
    assert h(F(1, 2)).index == F(1, 2)
    assert str(h2(-5)) == "h(-5/2)"
    with pytest.raises(ValueError):
        h2(4)
    with pytest.raises(ScalarParseError):
        h("1")


# -- bracket -------------------------------------------------------------------

def test_bracket_examples():
    assert bracket(d(2), d(-2)) == lie({d(0): 4, C: F(1, 2)})
    assert bracket(C, d(5)) == 0
    assert bracket(h("1/2"), h("-1/2")) == lie({L: F(1, 2)})
    assert bracket(d(1), h("1/2")) == lie({h("3/2"): F(-1, 2)})


def test_bracket_is_bilinear():
    x = lie({d(1): 2, h("1/2"): 1})
    y = lie({d(-1): 1, h("-1/2"): 3})
    expect = (bracket(d(1), d(-1)) * 2 + bracket(d(1), h("-1/2")) * 6
              + bracket(h("1/2"), d(-1)) + bracket(h("1/2"), h("-1/2")) * 3)
    assert bracket(x, y) == expect


@pytest.mark.parametrize("triple", [(d(1), d(-1), d(0)), (d(2), h("1/2"), h("-5/2")),
                                    (d(3), d(-3), h("1/2"))])
def test_jacobi_examples(triple):
    assert jacobi_defect(*triple) == 0


generators = st.one_of(
    st.integers(-6, 6).map(d),
    st.integers(-6, 5).map(lambda k: h2(2 * k + 1)),
    st.sampled_from([C, L]),
)


@given(generators, generators)
def test_antisymmetry(x, y):
    assert bracket(x, y) + bracket(y, x) == 0


@given(generators, generators, generators)
def test_jacobi(x, y, z):
    assert jacobi_defect(x, y, z) == 0


def test_window_generators():
    gens = window_generators(1)
    assert gens == [C, L, d(-1), d(0), d(1), h("-1/2"), h("1/2")]


def test_subalgebra_membership():
    assert d(1) in Dmn(1, 0) and d(0) not in Dmn(1, 0)
    assert h("1/2") in Dmn(1, 0) and h("-1/2") not in Dmn(1, 0)
    assert h("-1/2") in Dmn(1, 1) and h("-3/2") not in Dmn(1, 1)
    assert h("-99/2") in DmInf(0)
    assert d(3) in Vm(2) and h("5/2") not in Vm(2) and C in Vm(2) and L not in Vm(2)
    assert h("3/2") in Hm(1) and h("1/2") not in Hm(1)
    assert d(0) not in HEISENBERG and L in HEISENBERG
    assert all(g in FULL for g in window_generators(3))


# -- theta ---------------------------------------------------------------------

def test_theta_examples():
    spec = AutomorphismSpec({0: 1})
    assert apply_automorphism(spec, d(1)) == lie({d(1): 1, h("1/2"): 1, L: F(1, 2)})
    assert apply_automorphism(spec, h("1/2")) == lie({h("1/2"): 1, L: 1})
    assert apply_automorphism(spec, C) == as_element(C)
    assert apply_automorphism(AutomorphismSpec(), d(4)) == as_element(d(4))


def test_theta_element_display():
    alpha = AutomorphismSpec({0: 1, 2: 3}).element()
    assert alpha == lie({h("-1/2"): -2, h("3/2"): 2})


specs = st.dictionaries(st.integers(-3, 3), small_rationals, max_size=3).map(AutomorphismSpec)
window_gens = st.sampled_from(window_generators(4))


@given(specs, window_gens, window_gens)
def test_theta_is_homomorphism(spec, x, y):
    lhs = apply_automorphism(spec, bracket(x, y))
    rhs = bracket(apply_automorphism(spec, x), apply_automorphism(spec, y))
    assert lhs == rhs


@given(specs, window_gens)
def test_theta_inverse(spec, x):
    assert apply_automorphism(spec.negated(), apply_automorphism(spec, x)) == as_element(x)


def test_theta_matches_exponential_of_ad():
    # exp(ad alpha) truncates after the second term since [alpha, [alpha, x]] is central
    spec = AutomorphismSpec({0: F(1, 3), -1: 2, 2: -1})
    alpha = spec.element()
    for x in window_generators(3):
        once = bracket(alpha, x)
        expect = as_element(x) + once + bracket(alpha, once) * F(1, 2)
        assert apply_automorphism(spec, x) == expect


# -- Whittaker functions ---------------------------------------------------------

def test_whittaker_d_structure():
    phi = WhittakerFunctionD.make(1, {1: 3, 2: 5}, {"1/2": 2}, 0, 7)
    assert phi.value(d(2)) == 5 and phi.value(d(3)) == 0
    assert phi.value(h("1/2")) == 2 and phi.value(h("3/2")) == 0
    assert phi.value(L) == 7
    with pytest.raises(OutsideDomain):
        phi.value(d(0))
    assert phi.value(d(0), strict=False) == 0
    with pytest.raises(SupportViolation):
        WhittakerFunctionD.make(1, {3: 1})
    with pytest.raises(SupportViolation):
        WhittakerFunctionD.make(1, h={"3/2": 1})


def test_validate_whittaker_examples():
    assert validate_whittaker(WhittakerFunctionD.make(1, {1: 3, 2: 5}, {"1/2": 2}, 0, 7))
    assert validate_whittaker(WhittakerFunctionH.make({"1/2": 1}, 0))
    assert validate_whittaker(WhittakerFunctionV.make(2, {2: 1, 3: 4, 4: 2}, 5))
    raw = RawFunctional(Dmn(1, 0), {d(1): 1, d(3): 2})
    with pytest.raises(WhittakerViolation) as err:
        validate_whittaker(raw)
    assert err.value.generator == d(3)


def test_derive_phi_prime_examples():
    p = derive_phi_prime(WhittakerFunctionD.make(1, {1: 2, 2: 0}, {"1/2": 2}, 0, 1))
    assert (p.c_value, p.d(1), p.d(2)) == (-1, 0, 0)
    p = derive_phi_prime(WhittakerFunctionD.make(1, {1: F(3, 2), 2: -1}, {}, 0, 1))
    assert (p.c_value, p.d(1), p.d(2)) == (-1, F(3, 2), -1)
    p = derive_phi_prime(WhittakerFunctionD.make(0, {0: 5}, {}, 1, 1))
    assert (p.c_value, p.d(0)) == (0, 5 - F(1, 16))
    with pytest.raises(ZeroCentralCharge):
        derive_phi_prime(WhittakerFunctionD.make(1, {1: 1}))


def test_solve_twist_examples():
    spec = solve_twist_coefficients(WhittakerFunctionD.make(1, {1: 3, 2: 5}, {"1/2": 2}))
    assert (spec.a(0), spec.a(-1)) == (F(3, 2), F(5, 2))
    assert not solve_twist_coefficients(WhittakerFunctionD.make(1, {}, {"1/2": 1}))
    spec = solve_twist_coefficients(WhittakerFunctionD.make(2, {2: 1}, {"3/2": 1}))
    assert spec.as_dict() == {0: 1}
    with pytest.raises(Singular):
        solve_twist_coefficients(WhittakerFunctionD.make(1, {1: 1}))
    with pytest.raises(WrongCase):
        solve_twist_coefficients(WhittakerFunctionD.make(1, {1: 1}, {"1/2": 1}, 0, 1))


def test_twist_examples():
    phi = WhittakerFunctionD.make(1, {1: 4, 2: -2}, {"1/2": 1})
    twisted, _ = normalize_whittaker(phi)
    assert twisted.d(1) == twisted.d(2) == 0 and twisted.h("1/2") == 1
    assert twist_whittaker(phi, AutomorphismSpec()) == phi
    phi = WhittakerFunctionD.make(1, {}, {}, 0, 1)
    twisted = twist_whittaker(phi, AutomorphismSpec({0: 1}))
    assert twisted.d(1) == F(1, 2)
    assert twisted.h("1/2") == 1


@st.composite
def normalizable(draw):
    m = draw(st.integers(1, 3))
    dv = {k: draw(small_rationals) for k in range(m, 2 * m + 1)}
    hv = {F(2 * j + 1, 2): draw(small_rationals) for j in range(m - 1)}
    hv[F(2 * m - 1, 2)] = draw(small_rationals.filter(bool))
    return WhittakerFunctionD.make(m, dv, hv, draw(small_rationals), 0)


@given(normalizable())
def test_twist_normalization_kills_d_values(phi):
    twisted, spec = normalize_whittaker(phi)
    assert all(twisted.d(k) == 0 for k in range(phi.m, 2 * phi.m + 1))
    assert twisted.h_values == phi.h_values
    assert set(spec.support) <= set(range(-phi.m, 1))


@st.composite
def l_nonzero(draw):
    m = draw(st.integers(1, 3))
    dv = {k: draw(st.integers(0, 2)) for k in range(m, 2 * m + 1)}
    hv = {F(2 * j + 1, 2): draw(st.integers(0, 2)) for j in range(m)}
    return WhittakerFunctionD.make(m, dv, hv, 0, draw(st.integers(1, 2)))


@given(l_nonzero())
def test_phi_prime_criterion_agrees(phi):
    from mhv.analysis import criterion_virasoro_whittaker, criterion_whittaker_D
    assert criterion_whittaker_D(phi) == criterion_virasoro_whittaker(derive_phi_prime(phi))
