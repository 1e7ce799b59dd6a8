"""Exact integer Laurent polynomials in one variable.

Exponents may be negative; zero coefficients are never stored.  Used for
Kauffman bracket values (variable A) and Jones polynomials (variable t).
"""

from __future__ import annotations


class LaurentPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    d[int(e)] = int(c)
        self.coeffs = d

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            d[e] = d.get(e, 0) + c
        return LaurentPolynomial(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-other if isinstance(other, LaurentPolynomial) else -LaurentPolynomial({0: other}))

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        d: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPolynomial(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.coeffs.items()
            if c not in (1, -1):
                raise ValueError("negative power with non-unit coefficient")
            return LaurentPolynomial({e * k: c if k % 2 else 1})
        out = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by x^k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()})

    def mirror(self) -> "LaurentPolynomial":
        """Substitute x -> 1/x (negate every exponent)."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    def evaluate(self, x: int) -> int:
        total = 0
        for e, c in self.coeffs.items():
            if e >= 0:
                total += c * x**e
            else:
                if x in (1, -1):
                    total += c * x ** (-e)
                else:
                    raise ValueError("negative exponent at non-unit argument")
        return total

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def span(self) -> int:
        return self.max_exp() - self.min_exp() if self.coeffs else 0

    def divide_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division; raises ValueError when the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return LaurentPolynomial.zero()
        rem = dict(self.coeffs)
        dmax = other.max_exp()
        dlead = other.coeffs[dmax]
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            q, r = divmod(rem[e], dlead)
            if r:
                raise ValueError("not exactly divisible")
            out[e - dmax] = q
            for de, dc in other.coeffs.items():
                k = e - dmax + de
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(out)

    def to_pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted (exponent, coefficient) pairs."""
        return tuple(sorted(self.coeffs.items()))

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPolynomial":
        return cls(dict(pairs))

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                sign = "-" if c < 0 else ""
                exp = var if e == 1 else f"{var}^{e}"
                term = f"{sign}{mag}{exp}"
            parts.append(term)
        s = parts[0]
        for term in parts[1:]:
            s += term if term.startswith("-") else "+" + term
        return s

    def __repr__(self):
        return f"LaurentPolynomial({self.format('x')})"
