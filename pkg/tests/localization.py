"""Torus-fixed-point localization on Gr_k(n), independent of the dream model.

A subvariety cut out by column-interval rank conditions is restricted to the
chart around each coordinate subspace B. Its K-polynomial there comes from
the leading monomials of a Groebner basis (Taylor inclusion-exclusion over
lcms), graded by the torus weights of the chart coordinates.
"""
from itertools import combinations

import sympy as sp

E = sp.symbols("E1:9")


def chart(B, k, n):
    """k x n matrix with identity in columns B; entry (r, c) has weight E_c / E_{b_r}."""
    xs, weights = [], {}
    rows = []
    for r, b in enumerate(B):
        row = []
        for c in range(1, n + 1):
            if c in B:
                row.append(1 if c == b else 0)
            else:
                v = sp.Symbol(f"x{b}_{c}")
                xs.append(v)
                weights[v] = E[c - 1] / E[b - 1]
                row.append(v)
        rows.append(row)
    return sp.Matrix(rows), xs, weights


def rank_ideal(M, conditions):
    """Minors of size r+1 of the column blocks [a, b] for (a, b, r) in conditions."""
    gens = []
    k = M.rows
    for a, b, r in conditions:
        cols = list(range(a - 1, b))
        if r >= min(k, len(cols)):
            continue
        for rs in combinations(range(k), r + 1):
            for cs in combinations(cols, r + 1):
                m = sp.expand(M.extract(list(rs), list(cs)).det())
                if m != 0:
                    gens.append(m)
    return gens


def k_polynomial(gens, xs, weights):
    if not gens:
        return sp.Integer(1)
    if not xs:
        return sp.Integer(0)
    G = sp.groebner(gens, *xs, order="grevlex")
    if list(G.exprs) == [1]:
        return sp.Integer(0)
    leads = [sp.Poly(g, *xs).monoms(order="grevlex")[0] for g in G.exprs]
    # minimal generators only
    leads = [m for m in set(leads)
             if not any(o != m and all(p <= q for p, q in zip(o, m)) for o in set(leads))]
    total = sp.Integer(0)
    for size in range(len(leads) + 1):
        for S in combinations(leads, size):
            lcm = [max((m[t] for m in S), default=0) for t in range(len(xs))]
            term = sp.Integer((-1) ** size)
            for v, e in zip(xs, lcm):
                term *= weights[v] ** e
            total += term
    return sp.simplify(total)


def restriction(conditions, B, k, n):
    M, xs, weights = chart(B, k, n)
    return k_polynomial(rank_ideal(M, conditions), xs, weights)


def interval_conditions(n, dots):
    """rank(columns [a, b]) <= (b - a + 1) - #{dots inside [a, b] x [a, b]}."""
    out = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            inside = sum(1 for i, j in dots if a <= i and j <= b)
            out.append((a, b, b - a + 1 - inside))
    return out


def schubert_conditions(S, n):
    """Opposite Schubert variety of the subset S: rank(columns [1, b]) <= |S cap [1, b]|."""
    return [(1, b, sum(1 for s in S if s <= b)) for b in range(1, n + 1)]


def partition_of_subset(S, n):
    return tuple(p for p in sorted((sum(1 for t in range(s + 1, n + 1) if t not in S)
                                    for s in S), reverse=True) if p)


def expand_by_localization(dots, k, n):
    """K_T expansion {partition: Laurent polynomial in E} of the interval variety."""
    subsets = list(combinations(range(1, n + 1), k))
    target = {B: restriction(interval_conditions(n, dots), B, k, n) for B in subsets}
    basis = {S: {B: restriction(schubert_conditions(S, n), B, k, n) for B in subsets}
             for S in subsets}
    cs = sp.symbols(f"c0:{len(subsets)}")
    eqs = [sp.Eq(sum(c * basis[S][B] for c, S in zip(cs, subsets)), target[B]) for B in subsets]
    sol = sp.solve(eqs, cs, dict=True)[0]
    out = {}
    for c, S in zip(cs, subsets):
        v = sp.factor(sp.simplify(sol[c]))
        if v != 0:
            out[partition_of_subset(S, n)] = sp.expand(v)
    return out
