import random

from macsym.coeff import Q, T, parse_ratqt, ratqt
from macsym.fock import (commutator_contract, completeness_check,
                         matrix_element, p_bar_apply, skew_via_diffop,
                         skew_via_fock, symmetrizer_check,
                         vertex_product_check)
from macsym.macdonald import macdonald_pair, skew_q, structure_f
from macsym.partitions import partitions_of
from macsym.symfunc import NPoly, SymFunc, sym_gen


def test_pairing_contract_random():
    # the bra-ket pairing through the ring identification is the scalar product
    from macsym.pairing import inner_qt
    rng = random.Random(4)
    one = sym_gen("p", ())
    for _ in range(6):
        d = rng.randint(1, 5)
        f = SymFunc("p", {lam: ratqt(rng.randint(-3, 3)) for lam in partitions_of(d)})
        g = SymFunc("p", {lam: ratqt(rng.randint(-3, 3)) for lam in partitions_of(d)})
        assert matrix_element(f, one, g) == inner_qt(f, g)


def test_matrix_element_examples():
    p1, one = sym_gen("p", (1,)), sym_gen("p", ())
    assert matrix_element(p1, one, p1) == parse_ratqt("(1-q)/(1-t)")
    f = structure_f((1,), (1,))
    got = matrix_element(macdonald_pair((2,)).Qf,
                         macdonald_pair((1,)).P_p,
                         macdonald_pair((1,)).P_p)
    assert got == f[(2,)]


def test_skew_route_examples():
    assert skew_via_fock((2, 1), ()) == macdonald_pair((2, 1)).Qf
    assert skew_via_fock((2, 1), (2, 1)) == sym_gen("p", ())
    assert skew_via_diffop((2, 1), ()) == macdonald_pair((2, 1)).Qf
    assert skew_via_diffop((1,), (1,)) == sym_gen("p", ())
    assert skew_via_diffop((2,), (1,)) == skew_q((2,), (1,))


def test_three_routes_small():
    for d in range(4):
        for lam in partitions_of(d):
            for dm in range(d + 1):
                for mu in partitions_of(dm):
                    a = skew_q(lam, mu)
                    assert a == skew_via_fock(lam, mu) == skew_via_diffop(lam, mu)


def test_p_bar_is_scaled_derivative():
    f = sym_gen("p", (2, 2, 1))
    out = p_bar_apply(2, f)
    assert out.terms == {(2, 1): 2 * 2 * (1 - Q ** 2) / (1 - T ** 2)}
    assert not p_bar_apply(3, f)


def test_commutator_contract():
    rng = random.Random(2)
    for _ in range(4):
        d = rng.randint(1, 4)
        f = SymFunc("p", {lam: ratqt(rng.randint(-3, 3)) for lam in partitions_of(d)})
        for r in (1, 2):
            for s in (1, 2, 3):
                assert commutator_contract(r, s, f)


def test_completeness():
    rng = random.Random(9)
    for _ in range(4):
        d = rng.randint(1, 4)
        f = SymFunc("p", {lam: ratqt(rng.randint(-3, 3)) for lam in partitions_of(d)})
        assert completeness_check(f)


def test_vertex_product_beta_one():
    # t = q collapses each kernel factor to a single linear term
    assert vertex_product_check(1, 2, 3)
    from macsym.fock import _delta_factor_rational, _finite_pi_series
    assert _delta_factor_rational(1, 1) == -1  # coefficient of u in (1 - u)
    assert _delta_factor_rational(2, 1) == 0
    assert _finite_pi_series(1, 3) == [ratqt(1)] * 4  # 1/(1-u) telescoped


def test_vertex_product_betas():
    for beta in (1, 2, 3):
        for n in (2, 3):
            assert vertex_product_check(beta, n, 3)


def test_symmetrizer_examples():
    assert symmetrizer_check(1)
    assert symmetrizer_check(2)
    assert symmetrizer_check(4)
    # direct rational-function route for two variables: result is 1 + t
    x1 = NPoly(2, {(1, 0): ratqt(1)})
    x2 = NPoly(2, {(0, 1): ratqt(1)})
    # (x1 - t x2)/(x1 - x2) + (x2 - t x1)/(x2 - x1) has polynomial sum (1+t)(x1-x2)
    num = (x1 - x2.scale(T)) - (x2 - x1.scale(T))
    assert num == (x1 - x2).scale(1 + T)
