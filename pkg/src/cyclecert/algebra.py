"""Exact sparse polynomial and rational-function arithmetic over Q.

Coefficients are arbitrary-precision rationals (fractions.Fraction); nothing
in this module ever touches floating point.  A Polynomial stores a map from
exponent vectors to coefficients together with a sorted tuple of variable
names; construction canonicalizes (zero coefficients dropped, unused
variables pruned, variables sorted), so two equal values always have the same
representation and render to the same text.  Term order everywhere is graded
lexicographic: higher total degree first, ties broken by the exponent vector.

RationalFunction keeps numerator/denominator reduced (their gcd is trivial)
with the denominator monic under the same term order.  Reduction is eager:
it happens at construction, so printed forms stay in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import DivisionByZeroDenominator

Scalar = Union[int, Fraction]
PolyLike = Union["Polynomial", int, Fraction]
RatLike = Union["RationalFunction", "Polynomial", int, Fraction]

__all__ = [
    "Polynomial",
    "RationalFunction",
    "as_fraction",
    "poly_gcd",
    "exact_div",
]


def as_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints and 'p/q' strings to Fraction; floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {value!r}")
    return Fraction(value)


def _grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, Scalar]):
        vs = tuple(variables)
        cleaned: dict = {}
        for exp, coeff in terms.items():
            c = coeff if isinstance(coeff, Fraction) else as_fraction(coeff)
            if c == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(vs):
                raise ValueError("exponent arity does not match variable count")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent in polynomial term")
            cleaned[exp] = cleaned.get(exp, Fraction(0)) + c
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        used = [i for i in range(len(vs)) if any(e[i] for e in cleaned)]
        names = sorted(vs[i] for i in used)
        order = [vs.index(n) for n in names]
        self.vars: tuple = tuple(names)
        self.terms: dict = {tuple(e[i] for i in order): c for e, c in cleaned.items()}

    # ---------------------------------------------------------------- basics

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls((), {})

    @classmethod
    def constant(cls, value: Union[int, str, Fraction]) -> "Polynomial":
        return cls((), {(): as_fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls((name,), {(1,): Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if self.vars:
            raise ValueError(f"not a constant: {self.render()}")
        return self.terms.get((), Fraction(0))

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def leading(self) -> tuple:
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def leading_coefficient(self) -> Fraction:
        return self.leading()[1]

    # ------------------------------------------------------------ arithmetic

    @staticmethod
    def _coerce(value: PolyLike) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(as_fraction(value))

    def _aligned(self, other: "Polynomial"):
        names = sorted(set(self.vars) | set(other.vars))

        def remap(p: "Polynomial") -> dict:
            idx = [p.vars.index(n) if n in p.vars else None for n in names]
            out = {}
            for e, c in p.terms.items():
                out[tuple(e[i] if i is not None else 0 for i in idx)] = c
            return out

        return tuple(names), remap(self), remap(other)

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        names, a, b = self._aligned(other)
        for e, c in b.items():
            a[e] = a.get(e, Fraction(0)) + c
        return Polynomial(names, a)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = self._coerce(other)
        if other.is_constant:
            c = other.terms.get((), Fraction(0))
            return Polynomial(self.vars, {e: k * c for e, k in self.terms.items()})
        if self.is_constant:
            return other * self
        names, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return Polynomial(names, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other: RatLike) -> "RationalFunction":
        return RationalFunction(self) / other

    def __rtruediv__(self, other: RatLike) -> "RationalFunction":
        return RationalFunction(other) / RationalFunction(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return other == self
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    # --------------------------------------------------------------- calculus

    def differentiate(self, var: str) -> "Polynomial":
        if var not in self.vars:
            return Polynomial.zero()
        i = self.vars.index(var)
        out: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
        return Polynomial(self.vars, out)

    # -------------------------------------------------------------- valuation

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """Exact evaluation; every variable must be bound."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise ValueError(f"unbound variables in evaluate: {missing}")
        powers = []
        for i, v in enumerate(self.vars):
            val = as_fraction(point[v])
            top = max((e[i] for e in self.terms), default=0)
            col = [Fraction(1)]
            for _ in range(top):
                col.append(col[-1] * val)
            powers.append(col)
        total = Fraction(0)
        for e, c in self.terms.items():
            prod = c
            for i, k in enumerate(e):
                if k:
                    prod *= powers[i][k]
            total += prod
        return total

    def substitute(self, bindings: Mapping[str, PolyLike]) -> "Polynomial":
        """Polynomial-valued substitution; unbound variables stay symbolic."""
        if not any(v in bindings for v in self.vars):
            return self
        values = {
            v: self._coerce(bindings[v]) for v in self.vars if v in bindings
        }
        total = Polynomial.zero()
        for e, c in self.terms.items():
            prod = Polynomial.constant(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                v = self.vars[i]
                prod = prod * (values[v] ** k if v in values
                               else Polynomial((v,), {(k,): 1}))
            total = total + prod
        return total

    def coefficients_in(self, var: str) -> list:
        """Coefficients of powers of `var` (index = power), as Polynomials."""
        d = self.degree_in(var)
        if var not in self.vars:
            return [self]
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: list = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            key = e[:i] + e[i + 1:]
            buckets[e[i]][key] = c
        return [Polynomial(rest, b) for b in buckets]

    @staticmethod
    def from_coefficients_in(var: str, coeffs: Sequence["Polynomial"]) -> "Polynomial":
        x = Polynomial.variable(var)
        total = Polynomial.zero()
        for k, c in enumerate(coeffs):
            total = total + Polynomial._coerce(c) * x ** k
        return total

    def univariate(self) -> tuple:
        """(variable name or None, dense coefficient list low->high)."""
        if len(self.vars) > 1:
            raise ValueError(f"not univariate: variables {self.vars}")
        if not self.vars:
            return None, [self.terms.get((), Fraction(0))] if self.terms else [Fraction(0)]
        var = self.vars[0]
        d = self.degree_in(var)
        coeffs = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            coeffs[e[0]] = c
        return var, coeffs

    @staticmethod
    def from_univariate(var: str, coeffs: Sequence[Union[int, Fraction]]) -> "Polynomial":
        return Polynomial((var,), {(i,): as_fraction(c) for i, c in enumerate(coeffs) if c})

    # -------------------------------------------------------------- rendering

    def render(self) -> str:
        """Canonical text form: graded-lex order, explicit '*' and '^'."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, exp) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"


# ---------------------------------------------------------------------- gcd


def _trim_polys(coeffs: list) -> list:
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact polynomial quotient a/b; raises ValueError if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return Polynomial.zero()
    if b.is_constant:
        inv = Fraction(1) / b.constant_value()
        return a * inv
    names, ra, rb = a._aligned(b)
    lead_b = max(rb, key=_grlex_key)
    lc_b = rb[lead_b]
    rem = dict(ra)
    quo: dict = {}
    while rem:
        exp = max(rem, key=_grlex_key)
        diff = tuple(x - y for x, y in zip(exp, lead_b))
        if any(d < 0 for d in diff):
            raise ValueError("polynomial division is not exact")
        q = rem[exp] / lc_b
        quo[diff] = quo.get(diff, Fraction(0)) + q
        for eb, cb in rb.items():
            key = tuple(x + y for x, y in zip(diff, eb))
            new = rem.get(key, Fraction(0)) - q * cb
            if new == 0:
                rem.pop(key, None)
            else:
                rem[key] = new
    return Polynomial(names, quo)


def _monic(p: Polynomial) -> Polynomial:
    if p.is_zero:
        return p
    lc = p.leading_coefficient()
    return p * (Fraction(1) / lc)


def _uni_gcd(a: list, b: list) -> list:
    """Monic gcd of dense Fraction coefficient lists.

    Runs a primitive pseudo-remainder sequence over Z (clear denominators,
    strip integer content every step) so coefficient bit-size stays tame;
    naive Euclid over Q explodes.
    """
    import math

    def primitive_ints(f: list) -> list:
        den = 1
        for c in f:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in f]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        while ints and ints[-1] == 0:
            ints.pop()
        return ints

    def iprem(f: list, g: list) -> list:
        f = f[:]
        lg = g[-1]
        dg = len(g) - 1
        while f and len(f) - 1 >= dg:
            top = f[-1]
            shift = len(f) - 1 - dg
            f = [lg * c for c in f[:-1]]
            for i in range(dg):
                f[shift + i] -= top * g[i]
            while f and f[-1] == 0:
                f.pop()
        return f

    fa = primitive_ints([Fraction(c) for c in a])
    fb = primitive_ints([Fraction(c) for c in b])
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        r = iprem(fa, fb)
        g = 0
        for v in r:
            g = math.gcd(g, v)
        if g > 1:
            r = [v // g for v in r]
        fa, fb = fb, r
    if fa:
        lc = Fraction(fa[-1])
        return [Fraction(c) / lc for c in fa]
    return []


def _mono_content(p: Polynomial) -> dict:
    """Per-variable minimum exponent of p, keyed by name (monomial content)."""
    mins = None
    for e in p.terms:
        mins = e if mins is None else tuple(min(x, y) for x, y in zip(mins, e))
    return {v: m for v, m in zip(p.vars, mins or ()) if m}


def _strip_mono(p: Polynomial, mono: Mapping[str, int]) -> Polynomial:
    if not mono:
        return p
    shift = tuple(mono.get(v, 0) for v in p.vars)
    return Polynomial(p.vars, {tuple(x - m for x, m in zip(e, shift)): c
                               for e, c in p.terms.items()})


def _content_list(coeffs: list) -> Polynomial:
    g = Polynomial.zero()
    for c in coeffs:
        if not c.is_zero:
            g = poly_gcd(g, c)
    return g


def _prem_list(f: list, g: list) -> list:
    """Pseudo-remainder of coefficient lists (entries are Polynomials)."""
    lg = g[-1]
    r = _trim_polys(f[:])
    dg = len(g) - 1
    while r and len(r) - 1 >= dg:
        top = r[-1]
        shift = len(r) - 1 - dg
        r = [lg * c for c in r[:-1]]
        for i in range(dg):
            r[shift + i] = r[shift + i] - top * g[i]
        _trim_polys(r)
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, via primitive pseudo-remainder sequences."""
    if a.is_zero:
        return _monic(b)
    if b.is_zero:
        return _monic(a)
    ma, mb = _mono_content(a), _mono_content(b)
    shared = {v: min(ma.get(v, 0), mb.get(v, 0)) for v in set(ma) & set(mb)}
    shared = {v: m for v, m in shared.items() if m}
    a = _strip_mono(a, ma)
    b = _strip_mono(b, mb)
    if shared:
        names = tuple(shared)
        mono = Polynomial(names, {tuple(shared[v] for v in names): 1})
    else:
        mono = Polynomial.constant(1)
    core = _gcd_core(a, b)
    return _monic(core * mono)


def _gcd_core(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_constant or b.is_constant:
        return Polynomial.constant(1)
    common = sorted(set(a.vars) & set(b.vars))
    if not common:
        return Polynomial.constant(1)
    if len(set(a.vars) | set(b.vars)) == 1:
        _, ca = a.univariate()
        _, cb = b.univariate()
        g = _uni_gcd(ca, cb)
        return Polynomial.from_univariate(a.vars[0], g) if len(g) > 1 else Polynomial.constant(1)
    main = common[-1]
    A = _trim_polys(a.coefficients_in(main))
    B = _trim_polys(b.coefficients_in(main))
    cont_a = _content_list(A)
    cont_b = _content_list(B)
    prim_a = [exact_div(c, cont_a) for c in A]
    prim_b = [exact_div(c, cont_b) for c in B]
    gamma = poly_gcd(cont_a, cont_b)
    f, g = (prim_a, prim_b) if len(prim_a) >= len(prim_b) else (prim_b, prim_a)
    while True:
        if not g:
            prim = f
            break
        if len(g) == 1:
            prim = None
            break
        r = _prem_list(f, g)
        if not r:
            prim = g
            break
        cont_r = _content_list(r)
        f, g = g, [exact_div(c, cont_r) for c in r]
    if prim is None:
        return gamma
    main_poly = Polynomial.from_coefficients_in(main, prim)
    return gamma * main_poly


# ------------------------------------------------------------ rational funcs


class RationalFunction:
    """Quotient of polynomials, reduced, denominator monic (graded-lex)."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatLike, den: RatLike = 1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            q = RationalFunction._coerce(num) / RationalFunction._coerce(den)
            self.num, self.den = q.num, q.den
            return
        n = Polynomial._coerce(num)
        d = Polynomial._coerce(den)
        if d.is_zero:
            raise DivisionByZeroDenominator("denominator is identically zero")
        if n.is_zero:
            self.num, self.den = Polynomial.zero(), Polynomial.constant(1)
            return
        if not (n.is_constant or d.is_constant):
            g = poly_gcd(n, d)
            if not (g.is_constant and g.constant_value() == 1):
                n = exact_div(n, g)
                d = exact_div(d, g)
        lc = d.leading_coefficient()
        if lc != 1:
            inv = Fraction(1) / lc
            n = n * inv
            d = d * inv
        self.num, self.den = n, d

    # ---------------------------------------------------------------- basics

    @classmethod
    def constant(cls, value: Union[int, str, Fraction]) -> "RationalFunction":
        return cls(Polynomial.constant(value))

    @classmethod
    def variable(cls, name: str) -> "RationalFunction":
        return cls(Polynomial.variable(name))

    @staticmethod
    def _coerce(value: RatLike) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(value)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: {self.render()}")
        return self.num

    @property
    def free_variables(self) -> tuple:
        return tuple(sorted(set(self.num.vars) | set(self.den.vars)))

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other: RatLike) -> "RationalFunction":
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RatLike) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RatLike) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other: RatLike) -> "RationalFunction":
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> "RationalFunction":
        o = self._coerce(other)
        if o.num.is_zero:
            raise DivisionByZeroDenominator("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: RatLike) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            raise ValueError("rational-function powers must be integers")
        if exponent < 0:
            return (RationalFunction.constant(1) / self) ** (-exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # --------------------------------------------------------------- calculus

    def differentiate(self, var: str) -> "RationalFunction":
        """Quotient rule, reduced eagerly."""
        n, d = self.num, self.den
        return RationalFunction(
            n.differentiate(var) * d - n * d.differentiate(var), d * d)

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        dv = self.den.evaluate(point)
        if dv == 0:
            raise DivisionByZeroDenominator(
                f"denominator vanishes at {dict(point)!r}")
        return self.num.evaluate(point) / dv

    def substitute(self, bindings: Mapping[str, RatLike]) -> "RationalFunction":
        """Ring-homomorphic substitution; unbound names stay symbolic."""
        def sub_poly(p: Polynomial) -> "RationalFunction":
            if not any(v in bindings for v in p.vars):
                return RationalFunction(p)
            total = RationalFunction.constant(0)
            for e, c in p.terms.items():
                prod = RationalFunction.constant(c)
                for i, k in enumerate(e):
                    if not k:
                        continue
                    v = p.vars[i]
                    base = (self._coerce(bindings[v]) if v in bindings
                            else RationalFunction.variable(v))
                    prod = prod * base ** k
                total = total + prod
            return total

        new_den = sub_poly(self.den)
        if new_den.is_zero:
            raise DivisionByZeroDenominator(
                "substitution makes the denominator identically zero")
        return sub_poly(self.num) / new_den

    # -------------------------------------------------------------- rendering

    def render(self) -> str:
        if self.is_polynomial:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"
