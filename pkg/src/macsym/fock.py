"""Boson-Fock adapter and the scalar reductions of the vertex-operator picture.

The Fock space is identified with the ring of symmetric functions itself, so
matrix elements reduce to (q,t) scalar products; no oscillator algebra is
materialized.  The module carries three independent routes to the skew
functions, plus two scalar identities extracted from the vertex-operator
construction: the finite-product collapse of the kernels at t = q^beta and the
symmetrizer sum formula.
"""

from functools import lru_cache
from itertools import combinations, permutations

from .coeff import Q, T, ratqt
from .macdonald import macdonald_pair
from .pairing import inner_qt, qbinom_coeff
from .partitions import as_partition, partitions_of, weight
from .symfunc import SymFunc, convert, multiply


def matrix_element(bra, mult, ket):
    """<bra | mult^ | ket> = <bra, mult * ket> under the (q,t) scalar product."""
    return inner_qt(bra, multiply(mult, ket))


def skew_via_fock(lam, mu):
    """Skew function through vacuum matrix elements: coefficientwise pairing."""
    lam, mu = as_partition(lam), as_partition(mu)
    d = weight(lam) - weight(mu)
    out = SymFunc("p")
    if d < 0:
        return out
    q_lam = macdonald_pair(lam).Qf
    p_mu = macdonald_pair(mu).P_p
    for nu in partitions_of(d):
        pair_n = macdonald_pair(nu)
        c = matrix_element(q_lam, p_mu, pair_n.P_p)
        if c:
            out = out + pair_n.Qf.scale(c)
    return out


@lru_cache(maxsize=None)
def _pbar_factor(r):
    return r * (1 - Q ** r) / (1 - T ** r)


def p_bar_apply(r, f):
    """The lowering operator r (1-q^r)/(1-t^r) d/dp_r on a p-basis element."""
    fp = convert(f, "p")
    out = SymFunc("p")
    for nu, c in fp.terms.items():
        m = nu.count(r)
        if not m:
            continue
        rest = list(nu)
        rest.remove(r)
        key = as_partition(rest)
        piece = c * (m * _pbar_factor(r))
        prev = out.terms.get(key)
        out.terms[key] = piece if prev is None else prev + piece
    out.terms = {k: v for k, v in out.terms.items() if v}
    return out


def skew_via_diffop(lam, mu):
    """Skew function by letting P_mu act in the lowered power sums on Q_lam."""
    lam, mu = as_partition(lam), as_partition(mu)
    cur = SymFunc("p")
    target = macdonald_pair(lam).Qf
    for kappa, u in macdonald_pair(mu).P_p.terms.items():
        piece = target
        for part in kappa:
            piece = p_bar_apply(part, piece)
        cur = cur + piece.scale(u)
    return cur


def commutator_contract(r, s, f):
    """[pbar_r, p_s] f equals delta_{rs} r (1-q^r)/(1-t^r) f, exactly."""
    fp = convert(f, "p")
    p_s = SymFunc("p", {(s,): ratqt(1)})
    lhs = p_bar_apply(r, multiply(p_s, fp)) - multiply(p_s, p_bar_apply(r, fp))
    rhs = fp.scale(_pbar_factor(r)) if r == s else SymFunc("p")
    return lhs == rhs


def completeness_check(f):
    """sum_lam P_lam <Q_lam, f> reassembles f, degree by degree."""
    fp = convert(f, "p")
    out = SymFunc("p")
    for d in fp.degrees():
        for lam in partitions_of(d):
            pair = macdonald_pair(lam)
            c = inner_qt(pair.Qf, fp)
            if c:
                out = out + pair.P_p.scale(c)
    return out == fp


# ---------------------------------------------------------------------------
# scalar reductions of the vertex-operator construction
# ---------------------------------------------------------------------------

def _delta_factor_rational(m, beta):
    """c_m with t = q^beta: prod_{k<m} (q^beta - q^k) / (q;q)_m, exact in q."""
    num = ratqt(1)
    for k in range(m):
        num = num * (Q ** beta - Q ** k)
    den = ratqt(1)
    for k in range(1, m + 1):
        den = den * (1 - Q ** k)
    return num / den


def _finite_delta_poly(beta, deg):
    """Coefficients of prod_{k<beta} (1 - q^k u) in u, up to u^deg."""
    coeffs = [ratqt(1)]
    for k in range(beta):
        nxt = [ratqt(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * Q ** k
        coeffs = nxt
    coeffs += [ratqt(0)] * max(0, deg + 1 - len(coeffs))
    return coeffs[: deg + 1]


def _finite_pi_series(beta, deg):
    """Coefficients of 1 / prod_{k<beta} (1 - q^k u) in u, up to u^deg."""
    den = _finite_delta_poly(beta, deg)
    out = [ratqt(1)]
    for j in range(1, deg + 1):
        s = ratqt(0)
        for i in range(1, min(j, len(den) - 1) + 1):
            s = s + den[i] * out[j - i]
        out.append(-s)
    return out


def vertex_product_check(beta, n, d):
    """Finite-product collapse of both kernels at t = q^beta, exact in q.

    Checks the per-factor identities coefficientwise up to u^d, then
    assembles the full interchange kernel over n variables as an exact
    Laurent polynomial and compares against the finite product.
    """
    assert beta >= 1
    # per-factor interchange kernel
    finite = _finite_delta_poly(beta, max(d, beta))
    for m in range(max(d, beta) + 1):
        lhs = _delta_factor_rational(m, beta)
        rhs = finite[m] if m < len(finite) else ratqt(0)
        if lhs != rhs:
            return False
    # per-factor positive kernel: kappa_m(q, q^beta) against the geometric side
    pi_side = _finite_pi_series(beta, d)
    for m in range(d + 1):
        from .coeff import substitute
        lhs = substitute(qbinom_coeff(m), Q, Q ** beta)
        if lhs != pi_side[m]:
            return False
    # assembled interchange kernel over n variables (finite Laurent both ways)
    cm = [_delta_factor_rational(m, beta) for m in range(beta + 1)]
    pair = {}
    for dd in range(-beta, beta + 1):
        s = ratqt(0)
        for k in range(beta - abs(dd) + 1):
            s = s + cm[k + abs(dd)] * cm[k]
        if s:
            pair[dd] = s
    lhs_terms = {(0,) * n: ratqt(1)}
    for i in range(n):
        for j in range(i + 1, n):
            nxt = {}
            for e, c in lhs_terms.items():
                for dd, cd in pair.items():
                    ne = list(e)
                    ne[i] += dd
                    ne[j] -= dd
                    ne = tuple(ne)
                    v = nxt.get(ne, ratqt(0)) + c * cd
                    if v:
                        nxt[ne] = v
                    else:
                        nxt.pop(ne, None)
            lhs_terms = nxt
    rhs_terms = {(0,) * n: ratqt(1)}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(beta):
                nxt = {}
                for e, c in rhs_terms.items():
                    v = nxt.get(e, ratqt(0)) + c
                    if v:
                        nxt[e] = v
                    else:
                        nxt.pop(e, None)
                    ne = list(e)
                    ne[i] += 1
                    ne[j] -= 1
                    ne = tuple(ne)
                    v = nxt.get(ne, ratqt(0)) - c * Q ** k
                    if v:
                        nxt[ne] = v
                    else:
                        nxt.pop(ne, None)
                rhs_terms = nxt
    return lhs_terms == rhs_terms


def _perm_sign(perm):
    inv = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inv & 1 else 1


def _tmul(poly, var_a, var_b):
    """Multiply {exp: {tpow: int}} terms by (x_a - t x_b)."""
    out = {}
    for e, tc in poly.items():
        for var, tshift, sign in ((var_a, 0, 1), (var_b, 1, -1)):
            ne = list(e)
            ne[var] += 1
            ne = tuple(ne)
            acc = out.setdefault(ne, {})
            for tp, c in tc.items():
                v = acc.get(tp + tshift, 0) + sign * c
                if v:
                    acc[tp + tshift] = v
                else:
                    acc.pop(tp + tshift, None)
    return {e: tc for e, tc in out.items() if tc}


def symmetrizer_check(n):
    """Symmetrized product sum identity, exact in x and t.

    Clearing the Vandermonde turns the sum over permutations into polynomial
    arithmetic over Z[t]; the right side is prod_{k<=n} (1-t^k)/(1-t) times
    the Vandermonde.
    """
    assert n >= 1
    zero = (0,) * n
    lhs = {}
    for perm in permutations(range(n)):
        poly = {zero: {0: _perm_sign(perm)}}
        for i in range(n):
            for j in range(i + 1, n):
                poly = _tmul(poly, perm[i], perm[j])
        for e, tc in poly.items():
            acc = lhs.setdefault(e, {})
            for tp, c in tc.items():
                v = acc.get(tp, 0) + c
                if v:
                    acc[tp] = v
                else:
                    acc.pop(tp, None)
    lhs = {e: tc for e, tc in lhs.items() if tc}

    vandermonde = {zero: {0: 1}}
    for i in range(n):
        for j in range(i + 1, n):
            out = {}
            for e, tc in vandermonde.items():
                for var, sign in ((i, 1), (j, -1)):
                    ne = list(e)
                    ne[var] += 1
                    ne = tuple(ne)
                    acc = out.setdefault(ne, {})
                    for tp, c in tc.items():
                        v = acc.get(tp, 0) + sign * c
                        if v:
                            acc[tp] = v
                        else:
                            acc.pop(tp, None)
            vandermonde = {e: tc for e, tc in out.items() if tc}

    # prod_{k=1..n} (1 + t + ... + t^(k-1)) as a Z[t] factor
    tpoly = {0: 1}
    for k in range(1, n + 1):
        nxt = {}
        for shift in range(k):
            for tp, c in tpoly.items():
                nxt[tp + shift] = nxt.get(tp + shift, 0) + c
        tpoly = nxt
    rhs = {}
    for e, tc in vandermonde.items():
        acc = rhs.setdefault(e, {})
        for tp, c in tc.items():
            for tp2, c2 in tpoly.items():
                v = acc.get(tp + tp2, 0) + c * c2
                if v:
                    acc[tp + tp2] = v
                else:
                    acc.pop(tp + tp2, None)
    rhs = {e: tc for e, tc in rhs.items() if tc}
    return lhs == rhs
