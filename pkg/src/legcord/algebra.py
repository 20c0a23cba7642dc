"""Exact integer Laurent-polynomial arithmetic in one and two variables.

All coefficient arithmetic uses Python integers, which are arbitrary
precision; nothing here can silently wrap.  Values are immutable after
construction and safe to share between workers.
"""

import re
from fractions import Fraction


class LaurentPoly:
    """Integer Laurent polynomial in one variable (z by default).

    Stored sparsely as a map from integer exponent to nonzero integer
    coefficient.  Equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if not isinstance(c, int) or not isinstance(e, int):
                    raise TypeError("exponents and coefficients must be int")
                c = d.get(e, 0) + c
                if c:
                    d[e] = c
                elif e in d:
                    del d[e]
        self.coeffs = d

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff=1, exp=1):
        return cls({exp: coeff})

    # -- ring structure -----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            c = d.get(e, 0) + c
            if c:
                d[e] = c
            elif e in d:
                del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                c = d.get(e, 0) + c1 * c2
                if c:
                    d[e] = c
                elif e in d:
                    del d[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.coeffs) == 1:
                ((e, c),) = self.coeffs.items()
                if c in (1, -1):
                    return LaurentPoly({e * n: c if n % 2 else 1})
            raise ValueError("negative powers only defined for unit monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by z^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    # -- inspection ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def coeff(self, e):
        return self.coeffs.get(e, 0)

    @property
    def degree(self):
        """Largest exponent; undefined (ValueError) for the zero polynomial."""
        if not self.coeffs:
            raise ValueError("degree of zero polynomial is undefined")
        return max(self.coeffs)

    @property
    def min_degree(self):
        if not self.coeffs:
            raise ValueError("min degree of zero polynomial is undefined")
        return min(self.coeffs)

    def evaluate(self, x):
        """Evaluate at a rational point (exact)."""
        x = Fraction(x)
        return sum(c * x ** e for e, c in self.coeffs.items())

    # -- text form -----------------------------------------------------

    def render(self, var="z"):
        """Canonical descending-exponent text, e.g. ``z^4 + 3z^2 + 3``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            parts.append((c, _monomial_text(c, e, var)))
        text = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, body in parts[1:]:
            text += (" + " if c > 0 else " - ") + body
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"

    @classmethod
    def parse(cls, text, var="z"):
        """Parse the grammar produced by :meth:`render`."""
        terms = _parse_terms(text, (var,))
        return cls({exps[0]: c for c, exps in terms})


class LaurentPoly2:
    """Integer Laurent polynomial in two variables (a and z by default).

    Stored sparsely as a map from (a-exponent, z-exponent) to nonzero
    integer coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for key, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                ea, ez = key
                c = d.get((ea, ez), 0) + c
                if c:
                    d[(ea, ez)] = c
                elif (ea, ez) in d:
                    del d[(ea, ez)]
        self.coeffs = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff=1, a=0, z=0):
        return cls({(a, z): coeff})

    @classmethod
    def from_z_poly(cls, p, a_exp=0):
        return cls({(a_exp, e): c for e, c in p.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            c = d.get(k, 0) + c
            if c:
                d[k] = c
            elif k in d:
                del d[k]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly2.__new__(LaurentPoly2)
        out.coeffs = {k: -c for k, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        d = {}
        for (a1, z1), c1 in self.coeffs.items():
            for (a2, z2), c2 in other.coeffs.items():
                k = (a1 + a2, z1 + z2)
                c = d.get(k, 0) + c1 * c2
                if c:
                    d[k] = c
                elif k in d:
                    del d[k]
        out = LaurentPoly2.__new__(LaurentPoly2)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def coeff_of_a(self, k):
        """The z-polynomial multiplying a^k (zero polynomial if absent)."""
        return LaurentPoly({ez: c for (ea, ez), c in self.coeffs.items() if ea == k})

    def a_exponents(self):
        return sorted({ea for ea, _ in self.coeffs})

    @property
    def max_a_degree(self):
        if not self.coeffs:
            raise ValueError("a-degree of zero polynomial is undefined")
        return max(ea for ea, _ in self.coeffs)

    def render(self, vars=("a", "z")):
        if not self.coeffs:
            return "0"
        keys = sorted(self.coeffs, key=lambda k: (-k[0], -k[1]))
        parts = []
        for ea, ez in keys:
            c = self.coeffs[(ea, ez)]
            body = _monomial_text2(c, ea, ez, vars)
            parts.append((c, body))
        text = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, body in parts[1:]:
            text += (" + " if c > 0 else " - ") + body
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly2({self.render()!r})"

    @classmethod
    def parse(cls, text, vars=("a", "z")):
        terms = _parse_terms(text, vars)
        return cls({(exps[0], exps[1]): c for c, exps in terms})


class IntPoly:
    """One-variable integer polynomial in t, dense ascending-degree storage.

    Used for Alexander polynomials after clearing denominators.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ValueError("degree of zero polynomial is undefined")
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def reversed(self):
        """Coefficient reversal t^deg * p(1/t)."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def to_laurent(self, shift=0):
        return LaurentPoly({i + shift: c for i, c in enumerate(self.coeffs) if c})

    def render(self, var="t"):
        return self.to_laurent().render(var)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"


def poly_arith(p, q, op):
    """Combine two one-variable Laurent polynomials; op is 'add' or 'mul'."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def coeff_of_a(p, k):
    """Coefficient of a^k in a two-variable polynomial, as a z-polynomial."""
    return p.coeff_of_a(k)


def coeff_dominates(f, p):
    """True iff every coefficient of f - p and of p is nonnegative."""
    diff = f - p
    return all(c >= 0 for c in diff.coeffs.values()) and all(
        c >= 0 for c in p.coeffs.values()
    )


# -- text helpers ------------------------------------------------------


def _monomial_text(c, e, var):
    mag = abs(c)
    if e == 0:
        return str(mag)
    v = var if e == 1 else f"{var}^{e}"
    return v if mag == 1 else f"{mag}{v}"


def _monomial_text2(c, ea, ez, vars):
    mag = abs(c)
    body = ""
    if ea:
        body += vars[0] if ea == 1 else f"{vars[0]}^{ea}"
    if ez:
        body += vars[1] if ez == 1 else f"{vars[1]}^{ez}"
    if not body:
        return str(mag)
    return body if mag == 1 else f"{mag}{body}"


_TERM_SPLIT = re.compile(r"(?=[+-])")


def _parse_terms(text, vars):
    """Shared term parser.  Returns a list of (coeff, exponents-per-var)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return []
    # normalize: strip whitespace, then split keeping signs
    squashed = text.replace(" ", "")
    chunks = [t for t in _TERM_SPLIT.split(squashed) if t]
    var_re = "|".join(re.escape(v) for v in vars)
    term_re = re.compile(
        rf"^([+-]?)(\d+)?((?:(?:{var_re})(?:\^-?\d+)?)*)$"
    )
    factor_re = re.compile(rf"({var_re})(?:\^(-?\d+))?")
    terms = []
    for chunk in chunks:
        m = term_re.match(chunk)
        if not m:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        sign, digits, factors = m.groups()
        if not digits and not factors:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        exps = {v: 0 for v in vars}
        for v, e in factor_re.findall(factors):
            exps[v] += int(e) if e else 1
        terms.append((c, tuple(exps[v] for v in vars)))
    return terms
