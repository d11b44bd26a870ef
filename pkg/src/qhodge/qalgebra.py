"""Brute-force model of the quantum SU(2) coordinate algebra and its dual.

Monomials are kept in the normal form ``A^k c^m c*^n`` where ``A^k`` means
``a^k`` for k >= 0 and ``a*^(-k)`` for k < 0; a monomial is the key ``(k, m, n)``.
The relations used for reordering are

    ac = q ca,  ac* = q c*a,  cc* = c*c,  a*a = 1 - cc*,  aa* = 1 - q^2 cc*

together with their stars.  The enveloping algebra acts through its values
on the generators a, a*, c, c* and the twisted Leibniz rule of its coproduct:
    h |> x = x_(1) <h, x_(2)>,    x <| h = <h, x_(1)> x_(2).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .scalar import ONE, Q, S, ZERO, ScalarQ, as_scalar, qnum

Monomial = tuple  # (k, m, n)

# -- algebra elements ---------------------------------------------------------------------


class AlgebraElement:
    """Finite combination of normal-form monomials with ScalarQ coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {}
        for mono, c in (terms or {}).items():
            c = as_scalar(c)
            if not c.is_zero():
                self.terms[tuple(mono)] = c

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, k: int = 0, m: int = 0, n: int = 0, coeff=ONE) -> "AlgebraElement":
        if m < 0 or n < 0:
            raise ValueError("exponents of c and c* must be nonnegative")
        return cls({(k, m, n): coeff})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, ZERO) + c
            if v.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = v
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, ScalarQ)):
            return self.scale(other)
        other = _coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                for mono, c in _mono_product(m1, m2).items():
                    v = out.get(mono, ZERO) + c1 * c2 * c
                    if v.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = v
        return AlgebraElement._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarQ)):
            return self.scale(other)
        return _coerce(other) * self

    def __pow__(self, n: int):
        out = ONE_ELEMENT
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "AlgebraElement":
        c = as_scalar(c)
        if c.is_zero():
            return AlgebraElement()
        return AlgebraElement._raw({k: v * c for k, v in self.terms.items()})

    @classmethod
    def _raw(cls, terms: dict) -> "AlgebraElement":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    def __eq__(self, other):
        if isinstance(other, (int, ScalarQ)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def star(self) -> "AlgebraElement":
        out = AlgebraElement()
        for (k, m, n), c in self.terms.items():
            # (A^k c^m c*^n)^* = c^n c*^m A^{-k}; moving A^{-k} to the front
            # costs q^{(m+n)k}.
            out = out + AlgebraElement({(-k, n, m): c.conjugate() * Q ** ((m + n) * k)})
        return out

    def counit(self) -> ScalarQ:
        """epsilon(a) = epsilon(a*) = 1, epsilon(c) = epsilon(c*) = 0."""
        return sum((c for (k, m, n), c in self.terms.items() if m == 0 and n == 0), ZERO)

    def charges(self) -> set:
        return {monomial_charge(mono) for mono in self.terms}

    def degree(self) -> int:
        return max((abs(k) + m + n for k, m, n in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, m, n), c in sorted(self.terms.items()):
            word = []
            if k:
                word.append(("a" if k > 0 else "a*") + (f"^{abs(k)}" if abs(k) > 1 else ""))
            if m:
                word.append("c" + (f"^{m}" if m > 1 else ""))
            if n:
                word.append("c*" + (f"^{n}" if n > 1 else ""))
            parts.append(f"({c})" + (" " + " ".join(word) if word else ""))
        return " + ".join(parts)


def _coerce(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, (int, ScalarQ)):
        return AlgebraElement.scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as an algebra element")


def monomial_charge(mono: Monomial) -> int:
    """n with delta_R(x) = x (x) z^{-n}: a and c count -1, a* and c* count +1."""
    k, m, n = mono
    return -(k + m - n)


def charge(x: AlgebraElement):
    ch = x.charges()
    if not ch:
        return 0
    if len(ch) > 1:
        return "mixed"
    return ch.pop()


@lru_cache(maxsize=None)
def _a_product(i: int, j: int) -> tuple:
    """A^i A^j as ((k, r), coeff) pairs meaning A^k (cc*)^r."""
    if i == 0 or j == 0 or (i > 0) == (j > 0):
        return (((i + j, 0), ONE),)
    out: dict = {}
    if i > 0:
        # a^i a*^{|j|} = a^{i-1} a*^{|j|-1} (1 - q^{2|j|} cc*)
        rest, factor = _a_product(i - 1, j + 1), Q ** (2 * (-j))
    else:
        # a*^{|i|} a^j = a*^{|i|-1} a^{j-1} (1 - q^{-2(j-1)} cc*)
        rest, factor = _a_product(i + 1, j - 1), Q ** (-2 * (j - 1))
    for (k, r), c in rest:
        out[(k, r)] = out.get((k, r), ZERO) + c
        out[(k, r + 1)] = out.get((k, r + 1), ZERO) - c * factor
    return tuple((key, v) for key, v in out.items() if not v.is_zero())


@lru_cache(maxsize=None)
def _mono_product(m1: Monomial, m2: Monomial) -> dict:
    k1, a1, b1 = m1
    k2, a2, b2 = m2
    # move c^{a1} c*^{b1} to the right of A^{k2}: each c or c* past a gives
    # q^{-1}, past a* gives q.
    swap = Q ** (-(a1 + b1) * k2)
    out = {}
    for (k, r), c in _a_product(k1, k2):
        out[(k, a1 + a2 + r, b1 + b2 + r)] = c * swap
    return out


ONE_ELEMENT = AlgebraElement.scalar(ONE)
A = AlgebraElement.monomial(1)
A_STAR = AlgebraElement.monomial(-1)
C = AlgebraElement.monomial(0, 1)
C_STAR = AlgebraElement.monomial(0, 0, 1)
LETTERS = {"a": A, "a*": A_STAR, "c": C, "c*": C_STAR}


def _letters(mono: Monomial) -> list[str]:
    k, m, n = mono
    return (["a"] * k if k > 0 else ["a*"] * (-k)) + ["c"] * m + ["c*"] * n


# -- the enveloping algebra ----------------------------------------------------------------------

GENERATORS = ("K", "Ki", "E", "F")
SQ = S  # q^(1/2)


def _pair_generator(g: str, letter: str) -> ScalarQ:
    table = {
        ("K", "a"): SQ ** -1, ("K", "a*"): SQ, ("Ki", "a"): SQ, ("Ki", "a*"): SQ ** -1,
        ("E", "c"): ONE, ("F", "c*"): -Q ** -1,
    }
    return table.get((g, letter), ZERO)


@lru_cache(maxsize=None)
def _act_letter(g: str, letter: str, side: str) -> AlgebraElement:
    p = lambda x: _pair_generator(g, x)  # noqa: E731
    if side == "left":
        # g |> x = x_(1) <g, x_(2)>
        images = {
            "a": A.scale(p("a")) - C_STAR.scale(Q * p("c")),
            "a*": A_STAR.scale(p("a*")) - C.scale(Q * p("c*")),
            "c": C.scale(p("a")) + A_STAR.scale(p("c")),
            "c*": C_STAR.scale(p("a*")) + A.scale(p("c*")),
        }
    else:
        # x <| g = <g, x_(1)> x_(2)
        images = {
            "a": A.scale(p("a")) - C.scale(Q * p("c*")),
            "a*": A_STAR.scale(p("a*")) - C_STAR.scale(Q * p("c")),
            "c": A.scale(p("c")) + C.scale(p("a*")),
            "c*": A_STAR.scale(p("c*")) + C_STAR.scale(p("a")),
        }
    return images[letter]


_COPRODUCT = {
    "K": (("K", "K"),),
    "Ki": (("Ki", "Ki"),),
    "E": (("E", "K"), ("Ki", "E")),
    "F": (("F", "K"), ("Ki", "F")),
}


def _group_like_factor(g: str, letters, side: str) -> ScalarQ:
    out = ONE
    for x in letters:
        img = _act_letter(g, x, side)
        out = out * img.terms[next(iter(img.terms))]
    return out


@lru_cache(maxsize=None)
def _act_monomial(g: str, mono: Monomial, side: str) -> AlgebraElement:
    letters = _letters(mono)
    if g in ("K", "Ki"):
        # K and K^{-1} act diagonally on the generators; the eigenvalue of
        # c and c* depends on the side.
        return AlgebraElement({mono: _group_like_factor(g, letters, side)})
    if not letters:
        return AlgebraElement()
    out = AlgebraElement()
    # Delta(g) = g (x) K + K^{-1} (x) g: the letter hit by g sits between
    # K^{-1}-factors (before it) and K-factors (after it).
    for i, x in enumerate(letters):
        before = _group_like_factor("Ki", letters[:i], side)
        after = _group_like_factor("K", letters[i + 1:], side)
        term = ONE_ELEMENT
        for y in letters[:i]:
            term = term * LETTERS[y]
        term = term * _act_letter(g, x, side)
        for y in letters[i + 1:]:
            term = term * LETTERS[y]
        out = out + term.scale(before * after)
    return out


def act_generator(g: str, x: AlgebraElement, side: str = "left") -> AlgebraElement:
    if g not in GENERATORS:
        raise ValueError(f"unknown generator {g!r}")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    out = AlgebraElement()
    for mono, c in x.terms.items():
        out = out + _act_monomial(g, mono, side).scale(c)
    return out


@dataclass(frozen=True)
class UqElement:
    """Combination of words in K, K^{-1}, E, F: ``{(g1, ..., gr): coeff}``.

    A word acts by composition: (g1 ... gr) |> x = g1 |> (... (gr |> x)) and
    x <| (g1 ... gr) = ((x <| g1) ...) <| gr.
    """
    terms: tuple  # ((word, coeff), ...)

    @classmethod
    def make(cls, terms: Mapping) -> "UqElement":
        out: dict = {}
        for w, c in terms.items():
            c = as_scalar(c)
            w = tuple(w)
            out[w] = out.get(w, ZERO) + c
        return cls(tuple(sorted((w, c) for w, c in out.items() if not c.is_zero())))

    @classmethod
    def word(cls, *gens: str, coeff=ONE) -> "UqElement":
        return cls.make({tuple(gens): coeff})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "UqElement") -> "UqElement":
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = d.get(w, ZERO) + c
        return UqElement.make(d)

    def __sub__(self, other: "UqElement") -> "UqElement":
        return self + other.scale(-ONE)

    def scale(self, c) -> "UqElement":
        c = as_scalar(c)
        return UqElement.make({w: v * c for w, v in self.terms})

    def __mul__(self, other):
        if isinstance(other, (int, ScalarQ)):
            return self.scale(other)
        d: dict = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                d[w1 + w2] = d.get(w1 + w2, ZERO) + c1 * c2
        return UqElement.make(d)

    def __rmul__(self, c):
        return self.scale(c)

    def star(self) -> "UqElement":
        """K* = K, E* = F, antilinear antihomomorphism."""
        sw = {"K": "K", "Ki": "Ki", "E": "F", "F": "E"}
        return UqElement.make({tuple(sw[g] for g in reversed(w)): c.conjugate() for w, c in self.terms})

    def antipode(self, inverse: bool = False) -> "UqElement":
        """S (or S^{-1}): S(K) = K^{-1}, S(E) = -qE, S(F) = -q^{-1}F, antihomomorphism."""
        if inverse:
            table = {"K": ("Ki", ONE), "Ki": ("K", ONE), "E": ("E", -Q ** -1), "F": ("F", -Q)}
        else:
            table = {"K": ("Ki", ONE), "Ki": ("K", ONE), "E": ("E", -Q), "F": ("F", -Q ** -1)}
        d: dict = {}
        for w, c in self.terms:
            coeff = c
            out = []
            for g in reversed(w):
                h, f = table[g]
                out.append(h)
                coeff = coeff * f
            d[tuple(out)] = d.get(tuple(out), ZERO) + coeff
        return UqElement.make(d)

    def counit(self) -> ScalarQ:
        return sum((c for w, c in self.terms if all(g in ("K", "Ki") for g in w)), ZERO)


UNIT = UqElement.word()


def act(h, x: AlgebraElement, side: str = "left") -> AlgebraElement:
    """Action of a generator name or UqElement on an algebra element."""
    if isinstance(h, str):
        return act_generator(h, x, side)
    out = AlgebraElement()
    for word, c in h.terms:
        y = x
        seq = reversed(word) if side == "left" else word
        for g in seq:
            y = act_generator(g, y, side)
            if y.is_zero():
                break
        out = out + y.scale(c)
    return out


def pairing(h, x: AlgebraElement) -> ScalarQ:
    """<h, x> = epsilon(h |> x)."""
    return act(h, x, "left").counit()


# -- tangent space ---------------------------------------------------------------------

TANGENT_LABELS = ("-", "+", "0", "z")


@lru_cache(maxsize=None)
def tangent_op(label: str, closed_form: int = 1) -> UqElement:
    """L_a; for L_0 ``closed_form`` picks the FE (1) or EF (2) expression."""
    q = Q
    dq = q - q ** -1
    if label == "-":
        return UqElement.word("F", "Ki", coeff=SQ)
    if label == "+":
        return UqElement.word("E", "Ki", coeff=SQ ** -1)
    if label == "z":
        return UqElement.make({("Ki", "Ki"): dq ** -1, (): -dq ** -1})
    if label == "0":
        if closed_form == 1:
            k2, km2, tail = ("K", "K"), ("Ki", "Ki"), ("F", "E")
        else:
            k2, km2, tail = ("Ki", "Ki"), ("K", "K"), ("E", "F")
        c = dq ** -2
        return UqElement.make({k2: q * c, km2: q ** -1 * c, (): -(q + q ** -1) * c, tail: ONE})
    raise ValueError(f"unknown tangent label {label!r}")


@lru_cache(maxsize=None)
def right_op(label: str) -> UqElement:
    """R_a = -S^{-1}(L_a)."""
    return tangent_op(label).antipode(inverse=True).scale(-ONE)


def casimir() -> UqElement:
    q = Q
    c = (q - q ** -1) ** -2
    return UqElement.make({("K", "K"): q * c, (): -2 * c - ScalarQ(1) / 4, ("Ki", "Ki"): q ** -1 * c,
                           ("F", "E"): ONE})


def ideal_generators() -> list[AlgebraElement]:
    """The nine generators of the ideal defining the 4D+ calculus."""
    q = Q
    a, a_, c, c_ = A, A_STAR, C, C_STAR
    w = a * q ** 2 + a_ - (1 + q ** 4) * q ** -1
    return [
        c * c,
        c * (a_ - a),
        a_ * a_ * q ** 2 - (a * a_ - c * c_) * (1 + q ** 2) + a * a,
        c_ * (a_ - a),
        c_ * c_,
        w * c,
        w * (a_ - a),
        w * c_,
        w * (a * q ** 2 + a_ - (1 + q ** 2)),
    ]


# -- the basis phi_{n,J,l} ---------------------------------------------------------------

def _check_nJl(n: int, two_j: int, l: int | None = None):
    if two_j < abs(n) or (two_j - abs(n)) % 2:
        raise ValueError(f"invalid (n, J) = ({n}, {two_j}/2)")
    if l is not None and not 0 <= l <= two_j:
        raise ValueError(f"l must be in 0..2J, got {l}")


@lru_cache(maxsize=None)
def build_phi(n: int, two_j: int, l: int) -> AlgebraElement:
    """phi_{n,J,l} = (c^{J-n/2} a*^{J+n/2}) <| E^l with J = two_j/2."""
    _check_nJl(n, two_j, l)
    p, r = (two_j - n) // 2, (two_j + n) // 2
    x = C ** p * A_STAR ** r
    for _ in range(l):
        x = act_generator("E", x, "right")
    return x


def valid_nJ(nmax: int, two_jmax: int) -> Iterable[tuple[int, int]]:
    for n in range(-nmax, nmax + 1):
        for two_j in range(abs(n), two_jmax + 1, 2):
            yield n, two_j


def eigen_ratio(y: AlgebraElement, x: AlgebraElement):
    """The scalar r with y = r x, or None."""
    if x.is_zero():
        return None
    if y.is_zero():
        return ZERO
    if set(y.terms) != set(x.terms):
        return None
    it = iter(x.terms)
    mono = next(it)
    r = y.terms[mono] / x.terms[mono]
    for mono in it:
        if y.terms[mono] != r * x.terms[mono]:
            return None
    return r


def casimir_check(n: int, two_j: int) -> bool:
    """C_q |> phi = (L_0 + [1/2]^2 - 1/4) |> phi for every l."""
    _check_nJl(n, two_j)
    shift = qnum(1) ** 2 - ScalarQ(1) / 4
    rhs_op = tangent_op("0") + UNIT.scale(shift)
    for l in range(two_j + 1):
        phi = build_phi(n, two_j, l)
        if act(casimir(), phi) != act(rhs_op, phi):
            return False
    return True


# -- the differential -----------------------------------------------------------------------

def differential(x: AlgebraElement) -> dict:
    """dx as {label: left coefficient}, dx = sum_a (L_a |> x) omega_a."""
    out = {}
    for lab in TANGENT_LABELS:
        y = act(tangent_op(lab), x)
        if not y.is_zero():
            out[lab] = y
    return out


def _left_mul(x: AlgebraElement, form: dict) -> dict:
    return {lab: x * y for lab, y in form.items()}


def _form_add(*forms: dict) -> dict:
    out: dict = {}
    for f in forms:
        for lab, y in f.items():
            out[lab] = out.get(lab, AlgebraElement()) + y
    return {lab: y for lab, y in out.items() if not y.is_zero()}


def om4_forms() -> dict:
    """The four left-invariant forms rebuilt from their expressions in a, c, da, dc."""
    q = Q
    da, da_, dc, dc_ = (differential(x) for x in (A, A_STAR, C, C_STAR))
    rho = qnum(1) * qnum(3)
    sq = lambda c, f: {lab: y.scale(c) for lab, y in f.items()}  # noqa: E731
    inner_z = _form_add(_left_mul(A_STAR, da), _left_mul(C_STAR, dc))
    inner_q = _form_add(_left_mul(A, da_), _left_mul(C, sq(q ** 2, dc_)))
    return {
        "-": _form_add(_left_mul(C_STAR, da_), sq(-q, _left_mul(A_STAR, dc_))),
        "+": _form_add(_left_mul(A, dc), sq(-q, _left_mul(C, da))),
        "z": _form_add(inner_z, sq(-ONE, inner_q)),
        "0": sq(((1 + q) * rho) ** -1, _form_add(inner_z, sq(q, inner_q))),
    }


@dataclass
class ReconstructionResult:
    label: str
    ok: bool
    coefficients: dict

    def as_dict(self) -> dict:
        return {"form": self.label, "pass": self.ok,
                "coefficients": {k: repr(v) for k, v in self.coefficients.items()}}


def differential_reconstruction() -> list[ReconstructionResult]:
    out = []
    for lab, form in om4_forms().items():
        ok = form == {lab: ONE_ELEMENT}
        out.append(ReconstructionResult(lab, ok, form))
    return out
