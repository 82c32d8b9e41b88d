"""Polynomials in q with integer coefficients, plus the q-analogs used here."""

from functools import lru_cache


class QPoly:
    """Dense coefficient-list polynomial in the formal variable q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power, coeff=1):
        return cls([0] * power + [coeff])

    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def reverse(self):
        "Flip the coefficient sequence."
        return QPoly(tuple(reversed(self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("q" if c == 1 else "%dq" % c)
            else:
                terms.append("q^%d" % i if c == 1 else "%dq^%d" % (c, i))
        return " + ".join(terms)

    def __repr__(self):
        return "QPoly(%r)" % (list(self.coeffs),)


ZERO = QPoly()
ONE = QPoly([1])


def reverse(p):
    return p.reverse()


def q_int(m):
    "[m]_q = 1 + q + ... + q^{m-1}"
    return QPoly([1] * m)


def q_factorial(k):
    out = ONE
    for i in range(1, k + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_stirling(n, k):
    """Stir_q(n,k) with Stir_q(n,k) = Stir_q(n-1,k-1) + [k]_q Stir_q(n-1,k).

    Base cases Stir_q(n,1) = Stir_q(n,n) = 1.
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError("need 1 <= k <= n, got n=%d k=%d" % (n, k))
    if k == 1 or k == n:
        return ONE
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)
