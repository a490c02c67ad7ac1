"""Independent oracles shared by the test modules."""
from skeinquot.chebyshev import cheb_S
from skeinquot.qlaurent import ONE, divide_exact, qint
from skeinquot.quotient import LocalizedPoly
from skeinquot.ringcore import XPoly


def s_basis(k):
    """y^k = sum_j a_j S_j(y); returns {j: a_j}."""
    out = {}
    rem = [0] * k + [1]
    while any(rem):
        j = max(i for i, c in enumerate(rem) if c)
        a = rem[j]
        out[j] = a
        s = cheb_S(j).coeffs
        for i, c in enumerate(s):
            rem[i] -= a * c
    return out


def localized_oracle(p):
    """Send S_j(y) to (-1)^j S_j(x1) S_j(x2) / [j+1]."""
    top = int(max(p.deg_y(), 0))
    den = ONE
    for j in range(1, top + 1):
        den = den * qint(j + 1)
    num = XPoly()
    for ey, xp in p.items():
        for j, a in s_basis(ey).items():
            ss = XPoly({(e1, e2): a1 * a2 for e1, a1 in enumerate(cheb_S(j).coeffs) if a1
                        for e2, a2 in enumerate(cheb_S(j).coeffs) if a2})
            scale = divide_exact(den, qint(j + 1)) * (a * (-1) ** j)
            num = num + xp * ss * scale
    return LocalizedPoly.from_fraction(num, den)
