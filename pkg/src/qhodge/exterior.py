"""Braided exterior algebra of the 4D+ calculus.

Tensors of degree k are sparse dicts ``{index: ScalarQ}`` over the base-4
big-endian basis of V^{(x)k}.  Operators are tuples of sparse columns.

A permutation p of {0..k-1} is lifted through a reduced word: ``reduced_word``
bubble-sorts p (always swapping the first adjacent inversion) and returns the
word ``w`` with ``p = t_{w1} ... t_{wn}``.  The lift is the product
``sigma_{w1} ... sigma_{wn}``, rightmost factor applied first, where
``sigma_j`` acts on tensor slots j, j+1 (1-based).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import calculus
from .calculus import CHARGES, STAR_LABEL, check_direction, index_word, word_index
from .linalg import (NotInSpanError, apply_columns, solve_in_span, sparse_rank,
                     vaccumulate, vadd, vratio, vscale)
from .scalar import I, ONE, Q, ZERO, ScalarQ

MAX_DEGREE = 5


class FormError(ValueError):
    """A tensor outside the range of the antisymmetrizer, or a degree mismatch."""


# -- braided permutation lifts ---------------------------------------------------

def apply_sigma(vec: dict, k: int, j: int, direction: str, cols=None) -> dict:
    """Apply sigma on slots j, j+1 (1-based) of a degree-k tensor.

    ``cols`` overrides the braiding columns (used for fault injection).
    """
    if not 1 <= j < k:
        raise IndexError(f"sigma index {j} out of range for degree {k}")
    if cols is None:
        cols = calculus.braiding_columns(direction)
    lo_size = 4 ** (k - j - 1)
    out: dict = {}
    for idx, c in vec.items():
        hi, rest = divmod(idx, 4 ** (k - j + 1))
        mid, lo = divmod(rest, lo_size)
        for r, v in cols[mid].items():
            n = (hi * 16 + r) * lo_size + lo
            val = out.get(n, ZERO) + c * v
            if val.is_zero():
                out.pop(n, None)
            else:
                out[n] = val
    return out


def reduced_word(perm) -> list[int]:
    """A reduced word w with perm = t_{w1}...t_{wn} (1-based adjacent transpositions)."""
    p = list(perm)
    word = []
    while True:
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j + 1)
                break
        else:
            break
    return word[::-1]


def permutation_sign(perm) -> int:
    return -1 if len(reduced_word(perm)) % 2 else 1


def inverse_permutation(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, x in enumerate(perm):
        inv[x] = i
    return tuple(inv)


def apply_word(vec: dict, k: int, word, direction: str) -> dict:
    for j in reversed(list(word)):
        vec = apply_sigma(vec, k, j, direction)
    return vec


def lift_permutation(word, k: int, direction: str) -> tuple:
    """The operator sigma_{w1}...sigma_{wn} on V^{(x)k} as sparse columns."""
    direction = check_direction(direction)
    word = list(word)
    for j in word:
        if not 1 <= j < k:
            raise IndexError(f"transposition index {j} out of range for degree {k}")
    return tuple(apply_word({i: ONE}, k, word, direction) for i in range(4 ** k))


# -- antisymmetrizers ------------------------------------------------------------

def antisymmetrize(vec: dict, k: int, direction: str) -> dict:
    """A^(k) applied to a tensor: the signed sum of all lifted permutations."""
    if k <= 1:
        return dict(vec)
    out: dict = {}
    for p in itertools.permutations(range(k)):
        word = reduced_word(p)
        sgn = ONE if len(word) % 2 == 0 else -ONE
        vaccumulate(out, apply_word(vec, k, word, direction), sgn)
    return out


@lru_cache(maxsize=None)
def antisymmetrizer_columns(k: int, direction: str) -> tuple:
    direction = check_direction(direction)
    if not 0 <= k <= MAX_DEGREE:
        raise ValueError(f"degree must be in 0..{MAX_DEGREE}, got {k}")
    if k == MAX_DEGREE:
        # A^(5) = (1 (x) A^(4)) B_{1,4}; cheaper than 120 lifts per column and
        # exact (the factorization is tested against the direct sum up to k=4).
        inner = antisymmetrizer_columns(k - 1, direction)
        cols = []
        for i in range(4 ** k):
            b = apply_shuffle({i: ONE}, 1, k - 1, direction)
            out: dict = {}
            for idx, c in b.items():
                head, tail = divmod(idx, 4 ** (k - 1))
                for t, v in inner[tail].items():
                    n = head * 4 ** (k - 1) + t
                    val = out.get(n, ZERO) + c * v
                    if val.is_zero():
                        out.pop(n, None)
                    else:
                        out[n] = val
            cols.append(out)
        return tuple(cols)
    return tuple(antisymmetrize({i: ONE}, k, direction) for i in range(4 ** k))


@dataclass
class SpectralReport:
    k: int
    direction: str
    eigenvalues: list  # (ScalarQ, multiplicity) pairs, zero first
    rank: int
    kernel_dim: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "sign": self.direction,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "eigenvalues": [{"value": str(v), "multiplicity": m} for v, m in self.eigenvalues],
        }


def _sectors(k: int) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i in range(4 ** k):
        out.setdefault(sum(CHARGES[d] for d in index_word(i, k)), []).append(i)
    return out


def operator_rank(cols, k: int, shift: ScalarQ = ZERO) -> int:
    """Rank of (M - shift*id) on V^{(x)k}, computed per U(1) charge sector."""
    total = 0
    for idxs in _sectors(k).values():
        vecs = []
        for i in idxs:
            v = dict(cols[i])
            if not shift.is_zero():
                v = vadd(v, {i: shift}, -ONE)
            vecs.append(v)
        total += sparse_rank(vecs)
    return total


@lru_cache(maxsize=None)
def spectral_report(k: int, direction: str) -> SpectralReport:
    direction = check_direction(direction)
    cols = antisymmetrizer_columns(k, direction)
    dim = 4 ** k
    r = operator_rank(cols, k)
    values = []
    if k < MAX_DEGREE:
        for e in eigenbasis(k, direction):
            if e.eigenvalue not in values:
                values.append(e.eigenvalue)
    eig = [(ZERO, dim - r)] if dim - r else []
    for v in values:
        eig.append((v, dim - operator_rank(cols, k, v)))
    return SpectralReport(k, direction, eig, r, dim - r)


def antisymmetrizer(k: int, direction: str):
    """(columns of A^(k), SpectralReport)."""
    return antisymmetrizer_columns(k, check_direction(direction)), spectral_report(k, direction)


# -- shuffles -------------------------------------------------------------------

def shuffles(k: int, l: int):
    """(k,l)-shuffles p: p(0)<...<p(k-1) and p(k)<...<p(k+l-1)."""
    n = k + l
    for head in itertools.combinations(range(n), k):
        tail = [i for i in range(n) if i not in head]
        yield tuple(head) + tuple(tail)


def apply_shuffle(vec: dict, k: int, l: int, direction: str) -> dict:
    """B_{k,l} applied to a tensor.

    Each shuffle p is lifted through the word of its inverse, so that at the
    classical flip the lift sends x_1 (x) ... (x) x_n to x_{p(1)} (x) ... (x) x_{p(n)}.
    """
    out: dict = {}
    for p in shuffles(k, l):
        word = reduced_word(inverse_permutation(p))
        sgn = ONE if len(word) % 2 == 0 else -ONE
        vaccumulate(out, apply_word(vec, k + l, word, direction), sgn)
    return out


def shuffle_operator(k: int, l: int, direction: str) -> tuple:
    if k + l > MAX_DEGREE:
        raise ValueError(f"k + l must be at most {MAX_DEGREE}")
    direction = check_direction(direction)
    return tuple(apply_shuffle({i: ONE}, k, l, direction) for i in range(4 ** (k + l)))


def tensor_product(x: dict, kx: int, y: dict, ky: int) -> dict:
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            out[i * 4 ** ky + j] = a * b
    return out


# -- forms ----------------------------------------------------------------------

@dataclass(eq=False)
class Form:
    """A left-invariant k-form of the exterior algebra for one braiding direction.

    ``tensor`` is the antisymmetrized representative; ``pre`` is one preimage
    under A^(k), which the star operation needs.
    """
    k: int
    direction: str
    tensor: dict
    pre: dict = field(default_factory=dict)

    @classmethod
    def from_tensor(cls, t: dict, k: int, direction: str) -> "Form":
        direction = check_direction(direction)
        coords = form_coordinates(t, k, direction)
        pre: dict = {}
        for e in eigenbasis(k, direction):
            vaccumulate(pre, e.form.pre, coords[e.name])
        return cls(k, direction, dict(t), pre)

    @classmethod
    def from_preimage(cls, pre: dict, k: int, direction: str) -> "Form":
        direction = check_direction(direction)
        return cls(k, direction, antisymmetrize(pre, k, direction), dict(pre))

    def _check(self, other: "Form"):
        if self.k != other.k or self.direction != other.direction:
            raise FormError("forms of different degree or direction")

    def __add__(self, other: "Form") -> "Form":
        self._check(other)
        return Form(self.k, self.direction, vadd(self.tensor, other.tensor),
                    vadd(self.pre, other.pre))

    def __sub__(self, other: "Form") -> "Form":
        self._check(other)
        return Form(self.k, self.direction, vadd(self.tensor, other.tensor, -ONE),
                    vadd(self.pre, other.pre, -ONE))

    def __neg__(self) -> "Form":
        return self.scale(-ONE)

    def scale(self, c) -> "Form":
        c = c if isinstance(c, ScalarQ) else ScalarQ(c)
        return Form(self.k, self.direction, vscale(self.tensor, c), vscale(self.pre, c))

    def __rmul__(self, c) -> "Form":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.k, self.direction) == (other.k, other.direction) and self.tensor == other.tensor

    def is_zero(self) -> bool:
        return not self.tensor

    def coordinates(self) -> dict:
        return form_coordinates(self.tensor, self.k, self.direction)

    def scalar(self) -> ScalarQ:
        """The value of a 0-form."""
        if self.k != 0:
            raise FormError("only 0-forms have a scalar value")
        return self.tensor.get(0, ZERO)

    def star(self) -> "Form":
        return star_form(self)

    def __repr__(self):
        coords = self.coordinates()
        body = " + ".join(f"({v})*{n}" for n, v in coords.items() if not v.is_zero())
        return f"Form[{self.k}{self.direction}]({body or '0'})"


def scalar_form(c, direction: str = "+") -> Form:
    c = c if isinstance(c, ScalarQ) else ScalarQ(c)
    t = {0: c} if not c.is_zero() else {}
    return Form(0, check_direction(direction), t, dict(t))


def monomial(word, direction: str) -> Form:
    """omega_{w1} ^ ... ^ omega_{wk}, labels or indices."""
    word = list(word)
    return Form.from_preimage({word_index(word): ONE}, len(word), direction)


def wedge(x: Form, y: Form) -> Form:
    """x ^ y: antisymmetrize the concatenated preimages."""
    if x.direction != y.direction:
        raise FormError("wedge of forms from different exterior algebras")
    k = x.k + y.k
    if k > 4:
        return Form(k, x.direction, {}, {})
    pre = tensor_product(x.pre, x.k, y.pre, y.k)
    return Form.from_preimage(pre, k, x.direction)


def _reverse_star(pre: dict, k: int) -> dict:
    """Reverse the tensor factors, star each one, conjugate the coefficient."""
    out: dict = {}
    sign = -ONE if k % 2 else ONE
    for idx, c in pre.items():
        w = index_word(idx, k)
        n = word_index([STAR_LABEL[a] for a in reversed(w)])
        vaccumulate(out, {n: c.conjugate() * sign})
    return out


def star_form(x: Form) -> Form:
    """The antilinear star: (A(s))^* = (-1)^{k(k-1)/2} A(R(s))."""
    pre = _reverse_star(x.pre, x.k)
    if (x.k * (x.k - 1) // 2) % 2:
        pre = vscale(pre, -ONE)
    return Form.from_preimage(pre, x.k, x.direction)


def u1_charge(x: Form):
    """Total U(1) charge of a homogeneous form, or "mixed"."""
    charges = {sum(CHARGES[d] for d in index_word(i, x.k)) for i in x.tensor}
    if not charges:
        return 0
    if len(charges) > 1:
        return "mixed"
    return charges.pop()


# -- canonical eigenbases ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EigenForm:
    name: str
    form: Form
    eigenvalue: ScalarQ


def _basis_preimages(k: int) -> list[tuple[str, dict]]:
    q = Q

    def mono(*pairs):
        out: dict = {}
        for c, w in pairs:
            vaccumulate(out, {word_index(w): ONE}, c if isinstance(c, ScalarQ) else ScalarQ(c))
        return out

    if k == 0:
        return [("1", {0: ONE})]
    if k == 1:
        return [("omega" + lab, {calculus.label_index(lab): ONE}) for lab in calculus.LABELS]
    if k == 2:
        return [
            ("phi+", mono((1, "-0"))),
            ("kappa+", mono((1, "+0"), (-(1 - q ** 2), "+z"))),
            ("psi+", mono((1, "0z"), (1 - q ** 2, "-+"))),
            ("phi-", mono((1, "+0"))),
            ("kappa-", mono((1, "-0"), (1 - q ** -2, "-z"))),
            ("psi-", mono((1, "0z"), (1 - q ** -2, "-+"))),
        ]
    if k == 3:
        return [
            ("chi-", mono((1, "+0z"))),
            ("chi+", mono((1, "-0z"))),
            ("chi0", mono((1, "-+z"))),
            ("chiz", mono((1, "-+0"))),
        ]
    if k == 4:
        return [("vol", mono((1, "-+0z")))]
    raise ValueError(f"no eigenbasis in degree {k}")


@lru_cache(maxsize=None)
def _eigenbasis(k: int, direction: str) -> tuple:
    out = []
    for name, pre in _basis_preimages(k):
        form = Form.from_preimage(pre, k, direction)
        lam = vratio(antisymmetrize(form.tensor, k, direction), form.tensor)
        if lam is None:
            raise FormError(f"{name} is not an eigenvector of A^({k}){direction}")
        out.append(EigenForm(name, form, lam))
    return tuple(out)


def eigenbasis(k: int, direction: str) -> tuple:
    """The canonical eigenforms of A^(k) with their computed eigenvalues.

    Both directions use the same monomial formulas; in the minus direction
    they are the checked forms (phi-check etc.), which as tensors are
    q-power multiples of the plus ones.
    """
    return _eigenbasis(k, check_direction(direction))


def basis_form(name: str, direction: str) -> Form:
    for k in range(5):
        for e in eigenbasis(k, direction):
            if e.name == name:
                return e.form
    raise KeyError(name)


def eigenvalue(name: str, direction: str) -> ScalarQ:
    for k in range(5):
        for e in eigenbasis(k, direction):
            if e.name == name:
                return e.eigenvalue
    raise KeyError(name)


def form_coordinates(t: dict, k: int, direction: str) -> dict:
    """Coordinates of a tensor in the canonical eigenbasis of degree k."""
    basis = eigenbasis(k, direction)
    try:
        coords = solve_in_span([e.form.tensor for e in basis], t)
    except NotInSpanError:
        raise FormError(f"tensor is not in the range of A^({k})") from None
    return {e.name: c for e, c in zip(basis, coords)}


def form_from_coordinates(coords: dict, k: int, direction: str) -> Form:
    out = Form(k, check_direction(direction), {}, {})
    for e in eigenbasis(k, direction):
        c = coords.get(e.name, ZERO)
        if not c.is_zero():
            out = out + e.form.scale(c)
    return out


@lru_cache(maxsize=None)
def star_partners(k: int, direction: str) -> dict:
    """name -> (partner name, factor) with (basis form)^* = factor * partner."""
    out = {}
    for e in eigenbasis(k, direction):
        coords = star_form(e.form).coordinates()
        nz = [(n, c) for n, c in coords.items() if not c.is_zero()]
        if len(nz) != 1:
            raise FormError(f"star of {e.name} is not a multiple of a basis form")
        out[e.name] = nz[0]
    return out


def volume_tensor(m: ScalarQ) -> dict:
    """theta = i m omega_- (x) omega_+ (x) omega_0 (x) omega_z."""
    return {word_index("-+0z"): I * m}


def iter_basis(direction: str) -> Iterable[EigenForm]:
    for k in range(5):
        yield from eigenbasis(k, direction)
