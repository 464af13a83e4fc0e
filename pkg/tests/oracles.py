"""Independent reference computations used only by the tests.

Deliberately naive: plain Fraction Gaussian elimination with division,
and closed forms / enumeration instead of the library's code paths.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb


def naive_rank(rows, p=None):
    m = [[Fraction(x) for x in r] for r in rows]
    if p is not None:
        m = [[x.numerator * pow(x.denominator, -1, p) % p for x in r] for r in m]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                if p is None:
                    f = m[i][c] / m[rank][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
                else:
                    f = m[i][c] * pow(m[rank][c], -1, p) % p
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def rnc_ideal_dim(d, t):
    """dim I_t for the degree-d rational normal curve.

    Monomials of degree t in x0..xd restrict to s^(dt-w) u^w with weight
    w = sum i*e_i; the restriction rank is the number of distinct weights.
    """
    monos = list(combinations_with_replacement(range(d + 1), t))
    weights = {sum(m) for m in monos}
    return len(monos) - len(weights)


def eagon_northcott(d, p):
    return p * comb(d, p + 1)


def sym_dim(n, d):
    return comb(n - 1 + d, d)
