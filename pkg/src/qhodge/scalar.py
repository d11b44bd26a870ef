"""Exact coefficient field: rational functions in s = q^(1/2) over Q(i).

An element is stored as ``(re + i*im) / den`` with ``re``, ``im`` and ``den``
integer multivariate polynomials (python-flint ``fmpz_mpoly``) sharing no
common factor, and ``den`` carrying a positive leading coefficient.  That
triple is canonical, so equality is a tuple comparison.

Besides ``s`` the polynomial ring carries a fixed set of real transcendental
parameters (``m``, ``alpha``, ..., ``gamma`` and their ``*_im`` partners).  A
complex symbolic parameter is modelled as ``alpha + i*alpha_im`` so complex
conjugation stays the plain ``i -> -i`` automorphism.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

import flint

PARAMETERS = (
    "m",
    "alpha", "beta", "nu", "epsilon", "xi", "gamma",
    "alpha_im", "beta_im", "nu_im", "epsilon_im", "xi_im", "gamma_im",
)
VARIABLES = ("s",) + PARAMETERS
_CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "degrevlex")
_NV = len(VARIABLES)
_ZERO_EXP = (0,) * _NV

_P0 = _CTX.constant(0)
_P1 = _CTX.constant(1)


class ScalarError(ArithmeticError):
    """Base class for scalar-field failures."""


class PoleError(ScalarError, ZeroDivisionError):
    """Division by zero or evaluation at a pole."""


class ParseError(ScalarError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        if pos >= 0:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)


Number = Union[int, Fraction, "ScalarQ"]


def _canon(re_, im, den):
    if den.is_zero():
        raise PoleError("division by the zero polynomial")
    if re_.is_zero() and im.is_zero():
        return _P0, _P0, _P1
    g = re_.gcd(im).gcd(den)
    if not g.is_one():
        re_, im, den = re_ / g, im / g, den / g
    if den.leading_coefficient() < 0:
        re_, im, den = -re_, -im, -den
    return re_, im, den


class ScalarQ:
    """Immutable element of Q(i)(s, parameters)."""

    __slots__ = ("_re", "_im", "_den", "_hash")

    def __init__(self, value: Number = 0):
        if isinstance(value, ScalarQ):
            self._re, self._im, self._den = value._re, value._im, value._den
        elif isinstance(value, int):
            self._re, self._im, self._den = _CTX.constant(value), _P0, _P1
        elif isinstance(value, Fraction):
            self._re, self._im, self._den = _canon(
                _CTX.constant(value.numerator), _P0, _CTX.constant(value.denominator))
        else:
            raise TypeError(f"cannot convert {type(value).__name__} to ScalarQ")
        self._hash = None

    @classmethod
    def _raw(cls, re_, im, den) -> "ScalarQ":
        obj = cls.__new__(cls)
        obj._re, obj._im, obj._den = _canon(re_, im, den)
        obj._hash = None
        return obj

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._den == o._den:
            return ScalarQ._raw(self._re + o._re, self._im + o._im, self._den)
        g = self._den.gcd(o._den)
        a, b = self._den / g, o._den / g
        return ScalarQ._raw(self._re * b + o._re * a, self._im * b + o._im * a, self._den * b)

    __radd__ = __add__

    def __neg__(self):
        obj = ScalarQ.__new__(ScalarQ)
        obj._re, obj._im, obj._den, obj._hash = -self._re, -self._im, self._den, None
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if o._im.is_zero():
            return ScalarQ._raw(self._re * o._re, self._im * o._re, self._den * o._den)
        if self._im.is_zero():
            return ScalarQ._raw(self._re * o._re, self._re * o._im, self._den * o._den)
        return ScalarQ._raw(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
            self._den * o._den,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ScalarQ":
        if self.is_zero():
            raise PoleError("inverse of zero")
        if self._im.is_zero():
            return ScalarQ._raw(self._den, _P0, self._re)
        norm = self._re * self._re + self._im * self._im
        return ScalarQ._raw(self._den * self._re, -self._den * self._im, norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self._im.is_zero():
            return ScalarQ._raw(self._re ** n, _P0, self._den ** n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons, hashing ----------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._re == o._re and self._im == o._im and self._den == o._den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((
                tuple(sorted(self._re.to_dict().items())),
                tuple(sorted(self._im.to_dict().items())),
                tuple(sorted(self._den.to_dict().items())),
            ))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self._re.is_zero() and self._im.is_zero()

    def is_real(self) -> bool:
        """True when fixed by conjugation (imaginary part zero)."""
        return self._im.is_zero()

    def is_constant(self) -> bool:
        return self._re.is_constant() and self._im.is_constant() and self._den.is_constant()

    def free_symbols(self) -> set[str]:
        used = set()
        for poly in (self._re, self._im, self._den):
            for exp in poly.monoms():
                used.update(VARIABLES[k] for k, e in enumerate(exp) if e)
        return used

    # -- structure ------------------------------------------------------------

    def conjugate(self) -> "ScalarQ":
        """Complex conjugation: fixes s and every real parameter, sends i to -i."""
        obj = ScalarQ.__new__(ScalarQ)
        obj._re, obj._im, obj._den, obj._hash = self._re, -self._im, self._den, None
        return obj

    def real_part(self) -> "ScalarQ":
        return ScalarQ._raw(self._re, _P0, self._den)

    def imag_part(self) -> "ScalarQ":
        return ScalarQ._raw(self._im, _P0, self._den)

    def numerator_denominator(self):
        """(re, im, den) as the underlying flint polynomials."""
        return self._re, self._im, self._den

    def sqrt(self) -> "ScalarQ":
        """An exact square root of a real perfect square (sign unspecified)."""
        if not self.is_real():
            raise ScalarError("sqrt is only defined for real elements")
        try:
            return ScalarQ._raw(self._re.sqrt(), _P0, self._den.sqrt())
        except Exception:
            pass
        try:
            # leading coefficient of the numerator may be negative
            root = (-self._re).sqrt()
        except Exception:
            raise ScalarError(f"{self} is not a perfect square") from None
        raise ScalarError(f"{self} is minus a square; no real root (root would be i*{root})")

    def subs(self, values: Mapping[str, Number]) -> "ScalarQ":
        """Substitute variables (``s``, parameters, or ``q`` for ``s**2``).

        Substituting ``q`` requires every power of ``s`` to be even.
        """
        values = dict(values)
        if "q" in values:
            qv = _coerce(values.pop("q"))
            if "s" in values:
                raise ScalarError("substitute either q or s, not both")
            if not _s_even(self):
                raise ScalarError("odd powers of s: supply s, not q")
            return _substitute(self, values, q_value=qv)
        return _substitute(self, values)

    def as_fraction(self) -> Fraction:
        """The rational value of a real constant element."""
        if not self.is_constant() or not self.is_real():
            raise ScalarError(f"{self} is not a rational constant")
        return Fraction(int(self._re.leading_coefficient()) if not self._re.is_zero() else 0,
                        int(self._den.leading_coefficient()))

    def as_gaussian(self) -> tuple[Fraction, Fraction]:
        """(real, imaginary) rational parts of a constant element."""
        if not self.is_constant():
            raise ScalarError(f"{self} is not a constant")
        d = int(self._den.leading_coefficient())
        r = int(self._re.leading_coefficient()) if not self._re.is_zero() else 0
        i = int(self._im.leading_coefficient()) if not self._im.is_zero() else 0
        return Fraction(r, d), Fraction(i, d)

    def __float__(self):
        return float(self.as_fraction())

    def __complex__(self):
        r, i = self.as_gaussian()
        return complex(float(r), float(i))

    # -- printing -----------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"ScalarQ({format_scalar(self)!r})"


def _coerce(value) -> "ScalarQ":
    if isinstance(value, ScalarQ):
        return value
    if isinstance(value, (int, Fraction)):
        return ScalarQ(value)
    return NotImplemented


def _s_even(x: ScalarQ) -> bool:
    return all(exp[0] % 2 == 0
               for poly in (x._re, x._im, x._den) for exp in poly.monoms())


def _poly_value(poly, values: dict, q_value):
    """Evaluate a polynomial term by term, keeping unlisted variables symbolic."""
    total = ZERO
    for exp, coeff in zip(poly.monoms(), poly.coeffs()):
        exp = tuple(int(e) for e in exp)
        term = ScalarQ(int(coeff))
        rest = list(exp)
        if q_value is not None and exp[0]:
            term = term * q_value ** (exp[0] // 2)
            rest[0] = 0
        for k, e in enumerate(exp):
            if not e or (k == 0 and q_value is not None):
                continue
            name = VARIABLES[k]
            if name in values:
                term = term * values[name] ** e
                rest[k] = 0
        if any(rest):
            term = term * ScalarQ._raw(_CTX.from_dict({tuple(rest): 1}), _P0, _P1)
        total = total + term
    return total


def _substitute(x: ScalarQ, values: Mapping[str, Number], q_value=None) -> ScalarQ:
    vals = {}
    for name, v in values.items():
        if name not in VARIABLES:
            raise ScalarError(f"unknown variable {name!r}")
        vals[name] = _coerce(v)
    num = _poly_value(x._re, vals, q_value) + I * _poly_value(x._im, vals, q_value)
    den = _poly_value(x._den, vals, q_value)
    if den.is_zero():
        raise PoleError(f"pole of {x} at {dict(values)}")
    return num / den


def _exact_sqrt(r: Fraction):
    if r < 0:
        return None
    n, d = math.isqrt(r.numerator), math.isqrt(r.denominator)
    if n * n == r.numerator and d * d == r.denominator:
        return Fraction(n, d)
    return None


def _split_poly(poly, k: int, c1: ScalarQ, c0: ScalarQ):
    """poly = A + B*t modulo t^2 = c1*t + c0, where t is variable number k."""
    powers = [(ONE, ZERO), (ZERO, ONE)]  # t^e = a_e + b_e t

    def power(e):
        while len(powers) <= e:
            a, b = powers[-1]
            # t * (a + b t) = a t + b (c1 t + c0)
            powers.append((b * c0, a + b * c1))
        return powers[e]

    A, B = ZERO, ZERO
    for exp, coeff in zip(poly.monoms(), poly.coeffs()):
        exp = [int(e) for e in exp]
        e, exp[k] = exp[k], 0
        rest = ScalarQ._raw(_CTX.from_dict({tuple(exp): int(coeff)}), _P0, _P1)
        a, b = power(e)
        A, B = A + rest * a, B + rest * b
    return A, B


def reduce_quadratic(x: ScalarQ, name: str, c1, c0) -> tuple[ScalarQ, ScalarQ]:
    """(a, b) with x = a + b*t, where t = ``name`` satisfies t^2 = c1*t + c0.

    c1 and c0 must not involve t.  If t is irrational over the other
    variables the pair is unique, so x vanishes on the relation iff a = b = 0.
    """
    c1, c0 = as_scalar(c1), as_scalar(c0)
    k = VARIABLES.index(name)
    ra, rb = _split_poly(x._re, k, c1, c0)
    ia, ib = _split_poly(x._im, k, c1, c0)
    na, nb = ra + I * ia, rb + I * ib
    da, db = _split_poly(x._den, k, c1, c0)
    # multiply through by the conjugate da + db*(c1 - t)
    norm = da * da + da * db * c1 - db * db * c0
    if norm.is_zero():
        raise PoleError("denominator vanishes on the relation")
    a = na * da + na * db * c1 - nb * db * c0
    b = nb * da - na * db
    return a / norm, b / norm


def eval_at(x: ScalarQ, q0, s0=None) -> ScalarQ:
    """Exact value of ``x`` at ``q = q0`` as a Gaussian-rational constant.

    ``x`` is already in lowest terms, so removable singularities evaluate to
    their limit.  Half-integer powers of q need ``s0`` (or a square ``q0``).
    """
    q0 = Fraction(q0)
    if q0 <= 0:
        raise ScalarError("q0 must be positive")
    if s0 is not None:
        s0 = Fraction(s0)
        if s0 * s0 != q0:
            raise ScalarError("s0 must square to q0")
        out = x.subs({"s": s0})
    elif _s_even(x):
        out = x.subs({"q": q0})
    else:
        root = _exact_sqrt(q0)
        if root is None:
            raise ScalarError(f"{x} has odd powers of s and q0={q0} is not a rational square")
        out = x.subs({"s": root})
    if not out.is_constant():
        raise ScalarError(f"free parameters remain after evaluation: {sorted(out.free_symbols())}")
    return out


# -- constants ----------------------------------------------------------------

ZERO = ScalarQ(0)
ONE = ScalarQ(1)
I = ScalarQ._raw(_P0, _P1, _P1)
S = ScalarQ._raw(_CTX.gen(0), _P0, _P1)
Q = S * S


def symbol(name: str) -> ScalarQ:
    """The real transcendental parameter ``name`` (see ``PARAMETERS``)."""
    if name not in PARAMETERS:
        raise ScalarError(f"unknown parameter {name!r}")
    return ScalarQ._raw(_CTX.gen(VARIABLES.index(name)), _P0, _P1)


def complex_symbol(name: str) -> ScalarQ:
    """``name + i*name_im``: a generic complex parameter."""
    return symbol(name) + I * symbol(name + "_im")


def qpow(n: int) -> ScalarQ:
    """q**n for integer n."""
    return S ** (2 * n)


@lru_cache(maxsize=None)
def qnum(two_u: int) -> ScalarQ:
    """The q-number [u] with u = two_u / 2."""
    return (S ** two_u - S ** (-two_u)) / (Q - Q ** -1)


def conjugate(x: Number) -> ScalarQ:
    return _coerce(x).conjugate()


def as_scalar(value) -> ScalarQ:
    """Coerce ints, Fractions, ScalarQ and grammar strings."""
    if isinstance(value, str):
        return parse_scalar(value)
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(value).__name__} to ScalarQ")
    return out


# -- printing -----------------------------------------------------------------

def _fmt_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _fmt_gauss(re_: Fraction, im: Fraction) -> str:
    if im == 0:
        return _fmt_rational(re_)
    if re_ == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_fmt_rational(im)}*i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    imag = "i" if mag == 1 else f"{_fmt_rational(mag)}*i"
    return f"({_fmt_rational(re_)} {sign} {imag})"


def _fmt_monomial(exp, use_q: bool) -> str:
    parts = []
    for k, e in enumerate(exp):
        if not e:
            continue
        name = VARIABLES[k]
        if k == 0 and use_q:
            name, e = "q", e // 2
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _sort_key(exp):
    return (-exp[0], tuple(-e for e in exp[1:]))


def _fmt_poly(terms: dict, use_q: bool) -> str:
    """terms: exponent tuple -> (re Fraction, im Fraction)."""
    pieces = []
    for exp in sorted(terms, key=_sort_key):
        re_, im = terms[exp]
        mono = _fmt_monomial(exp, use_q)
        negative = False
        if im == 0 and re_ < 0:
            negative, re_ = True, -re_
        elif re_ == 0 and im < 0:
            negative, im = True, -im
        coeff = _fmt_gauss(re_, im)
        if mono:
            body = mono if coeff == "1" else f"{coeff}*{mono}"
        else:
            body = coeff
        pieces.append(("-" if negative else "+", body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(x: ScalarQ) -> str:
    """Canonical text: expanded numerator over a monic denominator, powers descending."""
    if x.is_zero():
        return "0"
    use_q = _s_even(x)
    lc = Fraction(int(x._den.leading_coefficient()))
    num: dict = {}
    for exp, c in zip(x._re.monoms(), x._re.coeffs()):
        num[exp] = (Fraction(int(c)) / lc, Fraction(0))
    for exp, c in zip(x._im.monoms(), x._im.coeffs()):
        r, _ = num.get(exp, (Fraction(0), Fraction(0)))
        num[exp] = (r, Fraction(int(c)) / lc)
    den = {exp: (Fraction(int(c)) / lc, Fraction(0))
           for exp, c in zip(x._den.monoms(), x._den.coeffs())}
    top = _fmt_poly(num, use_q)
    if x._den.is_constant():
        return top
    if len(num) > 1:
        top = f"({top})"
    bottom = _fmt_poly(den, use_q)
    if len(den) > 1 or (bottom != "q" and bottom != "s" and not re.fullmatch(r"\w+", bottom)):
        bottom = f"({bottom})"
    return f"{top}/{bottom}"


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    """Recursive descent over the scalar grammar.

    expr := term (("+"|"-") term)* ; term := factor (("*"|"/") factor)*
    factor := atom ("^" signed-int)? ; atom := int | name | "(" expr ")" | "-" factor
    Names: q, s, i and the registered parameters.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            self.tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        if text[pos:].strip():
            raise ParseError("unexpected character", text, pos)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            want = repr(value) if value else "a token"
            raise ParseError(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> ScalarQ:
        if not self.tokens:
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] is not None:
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[1] in ("*", "/"):
            op, _, pos = self.take()[1], None, self.peek()[2]
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                value = value / rhs
        return value

    def factor(self):
        value = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] in ("+", "-"):
                sign = -1 if self.take()[1] == "-" else 1
            kind, tok, pos = self.peek()
            if kind != "int":
                raise ParseError("expected integer exponent", self.text, pos)
            self.take()
            n = sign * int(tok)
            if n < 0 and value.is_zero():
                raise ParseError("division by zero", self.text, pos)
            value = value ** n
        return value

    def atom(self):
        kind, tok, pos = self.peek()
        if tok == "-":
            self.take()
            return -self.factor()
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind == "int":
            self.take()
            return ScalarQ(int(tok))
        if kind == "name":
            self.take()
            if tok == "q":
                return Q
            if tok == "s":
                return S
            if tok == "i":
                return I
            if tok in PARAMETERS:
                return symbol(tok)
            raise ParseError(f"unknown name {tok!r}", self.text, pos)
        raise ParseError("expected a number, name or '('", self.text, pos)


def parse_scalar(text: str) -> ScalarQ:
    """Parse a scalar expression, e.g. ``"i*(q - q^-1)"`` or ``"1/(q^2-1)"``."""
    return _Parser(text).parse()
