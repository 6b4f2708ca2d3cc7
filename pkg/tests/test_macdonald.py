import pytest

from macsym.coeff import Q, T, parse_ratqt, ratqt, swap_qt
from macsym.macdonald import (SPECIALIZE_CASES, b_coeff, dr_apply,
                              dr_commute_check, dr_eigencheck, dr_eigenvalue,
                              hall_littlewood_p, load_cache, macdonald_pair,
                              save_cache, skew_p, skew_q, specialize_check,
                              structure_f)
from macsym.pairing import inner_qt, omega_qt
from macsym.partitions import conjugate, partitions_of, weight
from macsym.symfunc import NPoly, SymFunc, evaluate_n, multiply, sym_gen


def test_p_examples():
    assert macdonald_pair(()).P == sym_gen("m", ())
    assert macdonald_pair((1,)).P == sym_gen("m", (1,))
    P2 = macdonald_pair((2,)).P
    assert P2.terms[(2,)] == 1
    assert P2.terms[(1, 1)] == parse_ratqt("(1+q)(1-t)/(1-q*t)")


def test_b_examples():
    assert b_coeff((1,)) == parse_ratqt("(1-t)/(1-q)")
    assert b_coeff(()) == 1
    assert b_coeff((2,)) == parse_ratqt("(1-t)(1-q*t)/((1-q)(1-q^2))")


def test_unitriangularity():
    from macsym.partitions import dominates
    for d in range(6):
        for lam in partitions_of(d):
            P = macdonald_pair(lam).P
            assert P.terms[lam] == 1
            for mu in P.terms:
                assert dominates(lam, mu)


def test_orthogonality_small():
    for d in range(4):
        ps = list(partitions_of(d))
        for a in ps:
            for b in ps:
                got = inner_qt(macdonald_pair(a).P_p, macdonald_pair(b).P_p)
                assert got == (1 / b_coeff(a) if a == b else 0)


def test_q_pairing_normalized():
    for lam in partitions_of(3):
        pair = macdonald_pair(lam)
        assert inner_qt(pair.Qf, pair.P_p) == 1


def test_dr_examples():
    one = NPoly(2, {(0, 0): ratqt(1)})
    assert dr_apply(1, one, 2).terms == {(0, 0): 1 + T}
    f = NPoly(1, {(3,): ratqt(1)})
    assert dr_apply(1, f, 1).terms == {(3,): Q ** 3}
    assert dr_eigencheck((1,), 1, 2)
    assert dr_eigenvalue((1,), 1, 2) == T * Q + 1
    assert dr_eigencheck((2, 1), 2, 3)


def test_dr_eigenvalue_full_subset():
    # e_n of the bare spectrum is t^(n(n-1)/2)
    for n in (2, 3):
        assert dr_eigenvalue((), n, n) == T ** (n * (n - 1) // 2)


def test_dr_commute_spot():
    f = evaluate_n(sym_gen("m", (2, 1)), 3)
    assert dr_commute_check(1, 2, f, 3)
    assert dr_commute_check(2, 3, f, 3)


def test_structure_constants_examples():
    assert structure_f((), ()) == {(): ratqt(1)}
    assert structure_f((1,), ()) == {(1,): ratqt(1)}
    f = structure_f((1,), (1,))
    assert f[(2,)] == 1
    assert f[(1, 1)] == parse_ratqt("(1+t)(1-q)/(1-q*t)")


def test_structure_constants_reconstruct_product():
    for mu in partitions_of(2):
        for nu in partitions_of(2):
            prod = multiply(macdonald_pair(mu).P_p, macdonald_pair(nu).P_p)
            recon = SymFunc("p")
            for lam, c in structure_f(mu, nu).items():
                recon = recon + macdonald_pair(lam).P_p.scale(c)
            assert recon == prod


def test_skew_examples():
    assert skew_q((2, 1), ()) == macdonald_pair((2, 1)).Qf
    assert skew_q((2, 1), (2, 1)) == sym_gen("p", ())
    f = structure_f((1,), (1,))
    assert skew_q((2,), (1,)) == macdonald_pair((1,)).Qf.scale(f[(2,)])
    # skew P normalization
    assert skew_p((2,), ()) == macdonald_pair((2,)).P_p


def test_skew_adjointness():
    for lam in partitions_of(4):
        for dm in range(5):
            for mu in partitions_of(dm):
                sk = skew_q(lam, mu)
                for nu in partitions_of(weight(lam) - dm):
                    lhs = inner_qt(sk, macdonald_pair(nu).P_p)
                    rhs = inner_qt(
                        macdonald_pair(lam).Qf,
                        multiply(macdonald_pair(mu).P_p, macdonald_pair(nu).P_p))
                    assert lhs == rhs


def test_duality_small():
    for d in range(4):
        for lam in partitions_of(d):
            lhs = omega_qt(macdonald_pair(lam).P_p)
            rhs = macdonald_pair(conjugate(lam)).Qf.map_coeffs(swap_qt)
            assert lhs == rhs


def test_specializations():
    assert specialize_check((2,), "schur")
    assert specialize_check((2,), "monomial")
    assert specialize_check((2, 1), "inverse-qt")
    for lam in [(2,), (1, 1), (2, 1)]:
        for case in SPECIALIZE_CASES:
            assert specialize_check(lam, case), (lam, case)


def test_hall_littlewood_reference():
    # t -> q degeneration of the Hall-Littlewood family gives Schur too
    from macsym.coeff import substitute
    P = hall_littlewood_p((2, 1))
    spec = P.map_coeffs(lambda c: substitute(c, T, T))  # identity; stays exact
    assert spec.terms[(2, 1)] == 1


def test_cache_round_trip(tmp_path):
    macdonald_pair((2, 1))
    macdonald_pair((1,))
    path = tmp_path / "pairs.json"
    save_cache(path)
    import macsym.macdonald as mac
    saved = dict(mac._PAIRS)
    mac._PAIRS.clear()
    count = load_cache(path)
    assert count >= 2
    for lam in [(1,), (2, 1)]:
        assert mac._PAIRS[lam].P == saved[lam].P
        assert mac._PAIRS[lam].b == saved[lam].b
    assert load_cache(path) == count


def test_cache_rejects_unknown_format(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"format": "other", "version": 9, "records": []}')
    with pytest.raises(ValueError):
        load_cache(path)
