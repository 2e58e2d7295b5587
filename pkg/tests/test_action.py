import pytest
from hypothesis import given, settings, strategies as st

from gsl import BadParams, Field, Morphism
from gsl.action import (Coaction, MobiusMatrix, action_kernel,
                        chart2_closed_form, chart2_matches_closed_form,
                        coaction_from_matrix, coaction_verify, extends_to_p1,
                        is_faithful, laurent_invert, mobius_matrix,
                        pgl2_morphism_check, restrict_coaction,
                        standard_coaction)
from gsl.action import _lclean, _lmul
from gsl.errors import NotFractionalLinear, NotInvertible
from gsl.hopf import closed_subgroup, morphism_check
from gsl.zoo import D, alpha

F2 = Field(2)
F4 = Field(2, 2)


# -- the axioms ------------------------------------------------------------

def test_trivial_coaction_verifies():
    a2 = alpha(2)
    c = Coaction(a2, {1: a2.carrier.one()})
    assert coaction_verify(c)["ok"]
    assert action_kernel(c).dim == 0
    assert not is_faithful(c)


def test_unit_twist_fails_coassoc_only():
    a1 = alpha(1)
    A = a1.carrier
    c = Coaction(a1, {1: A.one() + A.var("T")})
    rep = coaction_verify(c)
    assert not rep["ok"]
    assert {f["axiom"] for f in rep["failures"]} == {"coassoc"}


def test_counit_failures_reported_degreewise():
    a1 = alpha(1)
    A = a1.carrier
    rep = coaction_verify(Coaction(a1, {1: A.one(), 0: A.one()}))
    assert ("counit", 0) in [(f["axiom"], f["degree"]) for f in rep["failures"]]
    # a dropped degree-one coefficient is a counit failure at 1
    rep = coaction_verify(Coaction(a1, {2: A.var("T")}))
    assert ("counit", 1) in [(f["axiom"], f["degree"]) for f in rep["failures"]]


def test_coaction_normalizes_zero_coefficients():
    a1 = alpha(1)
    A = a1.carrier
    c = Coaction(a1, {1: A.one(), 0: A.zero(), 5: A.zero()})
    assert sorted(c.rho) == [1]
    assert not c.coefficient(3).d


# -- Laurent arithmetic ------------------------------------------------------

def test_laurent_invert_pinned():
    a1 = alpha(1)
    A = a1.carrier
    u = {1: A.one(), 0: A.var("T")}
    uinv = laurent_invert(a1, u)
    assert sorted(uinv) == [-2, -1]
    assert uinv[-1] == A.one() and uinv[-2] == A.var("T")
    assert _lmul(u, uinv) == {0: A.one()}


def test_laurent_invert_guards():
    a1 = alpha(1)
    A = a1.carrier
    with pytest.raises(NotInvertible):
        laurent_invert(a1, {1: A.var("T")})
    with pytest.raises(NotInvertible):
        laurent_invert(a1, {1: A.one(), 0: A.one()})


COEFF_CODES = st.sampled_from(["0", "T", "TT", "T+TT"])


def _decode(A, code):
    T = A.var("T")
    return {"0": A.zero(), "T": T, "TT": T * T, "T+TT": T + T * T}[code]


@given(st.dictionaries(st.integers(min_value=-2, max_value=3), COEFF_CODES,
                       max_size=4),
       COEFF_CODES)
@settings(max_examples=60, deadline=None)
def test_laurent_inverse_round_trip(codes, unit_tail):
    a2 = alpha(2)
    A = a2.carrier
    r = {i: _decode(A, code) for i, code in codes.items()}
    r[0] = A.one() + _decode(A, unit_tail)
    r = _lclean(r)
    inv = laurent_invert(a2, r)
    assert _lmul(r, inv) == {0: A.one()}


# -- the standard family -----------------------------------------------------

def test_standard_grid_faithful_and_extends():
    for n in (1, 2, 3):
        for l in (0, 1, 2):
            for with_S in (True, False):
                c = standard_coaction(n, l, with_S)
                want = 2 ** (n + 1 + l) if with_S else 2 ** (n + l)
                assert c.group.dim == want
                assert is_faithful(c)
                ext = extends_to_p1(c)
                assert ext["extends"] and ext["witness"] is None
                assert chart2_matches_closed_form(c)


def test_standard_grid_over_F4():
    for l in (0, 1):
        c = standard_coaction(2, l, True, F4)
        assert is_faithful(c) and extends_to_p1(c)["extends"]
        assert chart2_matches_closed_form(c)


def test_standard_n0_torus_on_S():
    c = standard_coaction(0, 1, True)
    assert c.group.dim == 4
    assert is_faithful(c)
    assert extends_to_p1(c)["extends"]


def test_standard_guards():
    with pytest.raises(BadParams):
        standard_coaction(1, 0, True, Field(3))
    with pytest.raises(BadParams):
        standard_coaction(0, 1, False)


def test_chart2_pinned_small_case():
    # inverting X + T + SX^2 with T^2 = 0 gives S + 1/X + T/X^2
    c = standard_coaction(1, 0, True)
    A = c.group.carrier
    ch = extends_to_p1(c)["chart2"]
    assert sorted(ch.rho) == [0, 1, 2]
    assert ch.coefficient(0) == A.var("S")
    assert ch.coefficient(1) == A.one()
    assert ch.coefficient(2) == A.var("T")
    assert coaction_verify(ch)["ok"]


def test_nonextending_coaction_with_witness():
    a1 = alpha(1)
    A = a1.carrier
    c = Coaction(a1, {1: A.one(), 4: A.var("T")})
    assert coaction_verify(c)["ok"]
    ext = extends_to_p1(c)
    assert not ext["extends"] and ext["chart2"] is None
    assert ext["witness"]["degree"] == 2
    assert ext["witness"]["coefficient"] == A.var("T")
    rinv = laurent_invert(a1, c.rho)
    assert sorted(rinv) == [-1, 2] and rinv[2] == A.var("T")


# -- restriction --------------------------------------------------------------

def test_restrict_to_central_line():
    c = standard_coaction(2, 1, True)
    G = c.group
    A = G.carrier
    K = closed_subgroup(G, [A.var("S"), A.var("T") ** 2, A.var("U")])
    assert K.carrier.dim == 2
    q = Morphism(G, K, {nm: K.carrier.var(nm) for nm in A.vars})
    assert morphism_check(q)["ok"]
    cr = restrict_coaction(c, q)
    assert coaction_verify(cr)["ok"]
    assert sorted(cr.rho) == [0, 1]
    assert cr.coefficient(0) == K.carrier.var("T")
    assert is_faithful(cr)
    # anything killed by the big action is killed after restricting
    big, small = action_kernel(c), action_kernel(cr)
    assert all(small.contains(q.map(b)) for b in big.basis_polys())


def test_restrict_requires_matching_carrier():
    c = standard_coaction(1, 0, True)
    a1 = alpha(1)
    q = Morphism(a1, a1, {"T": a1.carrier.var("T")})
    with pytest.raises(BadParams):
        restrict_coaction(c, q)


def test_faithfulness_survives_presentation_change():
    for n in (1, 2, 3):
        c = standard_coaction(n, 0, True)
        DB = D(n, "B")
        B = DB.carrier
        g = Morphism(c.group, DB,
                     {"S": B.var("S"),
                      "T": B.var("T") + B.var("S") * B.var("T") ** 2})
        assert morphism_check(g)["ok"] and g.is_bijective()
        cB = restrict_coaction(c, g)
        assert coaction_verify(cB)["ok"]
        assert is_faithful(cB) == is_faithful(c)


# -- fractional-linear form ----------------------------------------------------

def test_mobius_entries_pinned():
    c = standard_coaction(1, 1, True)
    A = c.group.carrier
    S, T, W = A.var("S"), A.var("T"), A.one() + A.var("U")
    M = mobius_matrix(c)
    (a, b), (cc, d) = M.entries
    assert a == W + T * W * S
    assert b == T
    assert cc == W * S
    assert d == A.one()
    assert M.det() == W


def test_mobius_lands_in_frobenius_kernel():
    c = standard_coaction(1, 1, True)
    A = c.group.carrier
    M = mobius_matrix(c)
    rep = pgl2_morphism_check(M)
    assert rep["is_homomorphism_mod_scalars"]
    assert rep["lands_in_kerF"]
    pw = rep["power_matrix"]
    assert not pw[0][1].d and not pw[1][0].d
    assert pw[0][0] == A.one() and pw[1][1] == A.one()
    assert c.group.dim == 8 and is_faithful(c)


def test_mobius_round_trip():
    for args in ((1, 1, True), (2, 1, True), (2, 2, False), (3, 0, True)):
        c = standard_coaction(*args)
        M = mobius_matrix(c)
        back = coaction_from_matrix(c.group, M.entries)
        assert back.rho == c.rho


def test_affine_matrix_misses_frobenius_kernel():
    # no squaring term: the matrix is triangular and T^2 survives
    c = standard_coaction(2, 1, False)
    A = c.group.carrier
    M = mobius_matrix(c)
    (a, b), (cc, d) = M.entries
    assert a == A.one() + A.var("U") and b == A.var("T")
    assert not cc.d and d == A.one()
    rep = pgl2_morphism_check(M)
    assert rep["is_homomorphism_mod_scalars"]
    assert not rep["lands_in_kerF"]


def test_deeper_unipotent_misses_frobenius_kernel():
    rep = pgl2_morphism_check(mobius_matrix(standard_coaction(2, 1, True)))
    assert rep["is_homomorphism_mod_scalars"]
    assert not rep["lands_in_kerF"]


def test_identity_matrix_passes_both_checks():
    a1 = alpha(1)
    c = Coaction(a1, {1: a1.carrier.one()})
    M = mobius_matrix(c)
    rep = pgl2_morphism_check(M)
    assert rep["is_homomorphism_mod_scalars"] and rep["lands_in_kerF"]


def test_not_fractional_linear_cases():
    a1 = alpha(1)
    A = a1.carrier
    with pytest.raises(NotFractionalLinear):
        mobius_matrix(Coaction(a1, {1: A.one(), 4: A.var("T")}))
    with pytest.raises(NotFractionalLinear):
        mobius_matrix(Coaction(a1, {1: A.var("T")}))
    with pytest.raises(NotFractionalLinear):
        mobius_matrix(Coaction(a1, {1: A.one(), 0: A.one()}))
    with pytest.raises(NotFractionalLinear):
        mobius_matrix(Coaction(a1, {1: A.one(), -1: A.var("T")}))
