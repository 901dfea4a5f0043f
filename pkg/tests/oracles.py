"""Independent oracles shared by the test modules.

None of these go through the production code paths they check.
"""
from fractions import Fraction

import sympy


def h0_by_taylor(a, mults, points):
    """h0 of a*L - sum m_i E_i by affine Taylor expansion in sympy.

    For each point pick an affine chart where it has a nonzero coordinate,
    translate the point to the origin and require every coefficient of
    degree < m in the expansion to vanish.  The rank of the resulting
    linear system is computed by sympy.
    """
    if a < 0:
        return 0
    u, v = sympy.symbols("u v")
    exps = [(i, j, a - i - j) for i in range(a, -1, -1) for j in range(a - i, -1, -1)]
    rows = []
    for m, p in zip(mults, points):
        if m <= 0:
            continue
        p = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in p]
        chart = next(i for i in range(3) if p[i] != 0)
        p = [c / p[chart] for c in p]
        free = [i for i in range(3) if i != chart]
        local = [sympy.Poly(1, u, v)] * 3
        local[free[0]] = sympy.Poly(p[free[0]] + u, u, v)
        local[free[1]] = sympy.Poly(p[free[1]] + v, u, v)
        powers = [[f**k for k in range(a + 1)] for f in local]
        expansions = [(powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]).as_dict() for e in exps]
        for du in range(m):
            for dv in range(m - du):
                rows.append([e.get((du, dv), 0) for e in expansions])
    if not rows:
        return len(exps)
    return len(exps) - sympy.Matrix(rows).rank()


def intersect_by_gram(d1, d2):
    """Evaluate the form through an explicit Gram matrix product."""
    n = len(d1.m)
    gram = [[0] * (n + 1) for _ in range(n + 1)]
    gram[0][0] = 1
    for i in range(1, n + 1):
        gram[i][i] = -1
    # coordinates in the basis (L, E_1, ..., E_n): E_i coefficient is -m_i
    v1 = [d1.a] + [-m for m in d1.m]
    v2 = [d2.a] + [-m for m in d2.m]
    return sum(v1[i] * gram[i][j] * v2[j] for i in range(n + 1) for j in range(n + 1))


def ideal_dimension_by_sympy(group, gens):
    """Dimension of the two-sided span of a*x*b, with sympy's rank."""
    n = group.order
    rows = []
    for x in gens:
        for a in range(n):
            for b in range(n):
                row = [0] * n
                for g, c in enumerate(x):
                    if c:
                        row[group.table[group.table[a][g]][b]] += c
                rows.append(row)
    return sympy.Matrix(rows).rank()
