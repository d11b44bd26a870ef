"""Sesquilinear contractions and the Hodge operators T and L.

A contraction is the 4x4 matrix Gamma_ab = Gamma(omega_a, omega_b), conjugate
linear in the first slot.  It extends to tensors leg by leg: slot i of the
first argument pairs with slot i of the second and the remaining tail of the
second argument passes through.

With theta = i m omega_- (x) omega_+ (x) omega_0 (x) omega_z and
mu = A^(4) theta, the operators act on eigenforms xi of A^(k) as

    T(xi) = (lambda_{xi*} / lambda_xi) * (A^(4-k)(Gamma(xi, B_{k,4-k} theta)))^*
    L(xi) = (1 / lambda_xi) * (Gamma(xi, mu))^*

and are extended C-linearly.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import exterior as ext
from .calculus import check_direction, index_word, word_index
from .linalg import vaccumulate
from .scalar import (I, ONE, Q, ZERO, ScalarError, ScalarQ, as_scalar, complex_symbol,
                     eval_at, reduce_quadratic, symbol)

PARAM_NAMES = ("alpha", "beta", "nu", "epsilon", "xi", "gamma")
SAMPLE_Q = Fraction(1, 2)


class HodgeError(ValueError):
    """A precondition of a Hodge-operator routine does not hold."""


@dataclass(frozen=True)
class Contraction:
    """Gamma_ab in basis order (-, +, 0, z) with the U(1)-coinvariant zero pattern.

    ``relation`` optionally records that one parameter symbol t satisfies
    t^2 = c1*t + c0 (``(name, c1, c0)``); zero tests then reduce modulo it.
    This is how instances that need a square root (families b and c) are
    represented exactly.
    """
    alpha: ScalarQ
    beta: ScalarQ
    nu: ScalarQ = ZERO
    epsilon: ScalarQ = ZERO
    xi: ScalarQ = ZERO
    gamma: ScalarQ = ZERO
    relation: tuple | None = None

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.relation is not None:
            name, c1, c0 = self.relation
            object.__setattr__(self, "relation", (name, as_scalar(c1), as_scalar(c0)))

    def matrix(self) -> list[list[ScalarQ]]:
        g = [[ZERO] * 4 for _ in range(4)]
        g[0][0], g[1][1] = self.alpha, self.beta
        g[2][2], g[2][3] = self.nu, self.epsilon
        g[3][2], g[3][3] = self.xi, self.gamma
        return g

    def params(self) -> dict:
        return {n: getattr(self, n) for n in PARAM_NAMES}

    def canon(self, x: ScalarQ):
        """A canonical representative of x modulo the relation."""
        if self.relation is None:
            return x
        return reduce_quadratic(x, *self.relation)

    def is_zero(self, x: ScalarQ) -> bool:
        if self.relation is None:
            return x.is_zero()
        a, b = self.canon(x)
        return a.is_zero() and b.is_zero()

    def equal(self, x: ScalarQ, y: ScalarQ) -> bool:
        return self.is_zero(x - y)

    def nonzero(self, coords: dict) -> dict:
        return {n: v for n, v in coords.items() if not self.is_zero(v)}

    @classmethod
    def from_mapping(cls, data: Mapping) -> "Contraction":
        missing = [n for n in ("alpha", "beta") if n not in data]
        if missing:
            raise HodgeError(f"missing contraction parameters: {missing}")
        return cls(**{n: as_scalar(data.get(n, "0")) for n in PARAM_NAMES})

    @classmethod
    def symbolic(cls, complex_params: bool = True) -> "Contraction":
        make = complex_symbol if complex_params else symbol
        return cls(*(make(n) for n in PARAM_NAMES))


def family_a(alpha=None, sign: int = 1) -> Contraction:
    """Closed form of family (a): nu = 0, xi = epsilon = sign*(q^2-1)*alpha.

    sign = -1 gives epsilon = (1-q^2) alpha, gamma = (1+q^2) alpha.
    """
    a = symbol("alpha") if alpha is None else as_scalar(alpha)
    eps = sign * (Q ** 2 - 1) * a
    gam = -sign * (Q ** 2 + 1) * a
    return Contraction(a, Q ** 2 * a, ZERO, eps, eps, gam)


def family_b(alpha=None, t=Fraction(1, 2)) -> Contraction:
    """A family (b) instance with epsilon = t (q^2-1) alpha, 0 < t < 1.

    The cubic then fixes nu rationally and the quartic leaves gamma as a root
    of a quadratic, kept symbolic through the relation on ``gamma``.
    """
    a = symbol("alpha") if alpha is None else as_scalar(alpha)
    t = Fraction(t)
    u = Q ** 2
    eps = (u - 1) * a * t
    nu = (u - 1) ** 2 * a * (t * (1 - t * t)) / (u + 1)
    c1 = (u + 1) * a / (t * (1 - t * t))
    c0 = (u + 1) ** 2 * a ** 2 * ((3 - 2 * t * t) / (1 - t * t))
    return Contraction(a, u * a, nu, eps, eps, symbol("gamma"), ("gamma", c1, c0))


def family_c(alpha=None) -> Contraction:
    """Family (c): gamma = 0, 2 eps^2 = 3 (q-1/q)^2 alpha beta, nu from eps.

    epsilon stays symbolic, tied to alpha by the relation eps^2 = 3/2 (q^2-1)^2 alpha^2.
    """
    a = symbol("alpha") if alpha is None else as_scalar(alpha)
    u = Q ** 2
    eps = symbol("epsilon")
    nu = -(u - 1) * eps / (2 * (u + 1))
    return Contraction(a, u * a, nu, eps, eps, ZERO,
                       ("epsilon", ZERO, Fraction(3, 2) * (u - 1) ** 2 * a ** 2))


@dataclass(frozen=True)
class HodgeConfig:
    contraction: Contraction
    m: ScalarQ = field(default_factory=lambda: symbol("m"))
    direction: str = "+"

    def __post_init__(self):
        object.__setattr__(self, "m", as_scalar(self.m))
        object.__setattr__(self, "direction", check_direction(self.direction))
        if self.m.is_zero():
            raise HodgeError("m must be nonzero")
        if not self.m.is_real():
            raise HodgeError("m must be real")

    def flipped(self) -> "HodgeConfig":
        return replace(self, direction="-" if self.direction == "+" else "+")


# -- contraction --------------------------------------------------------------------

def contract(gamma, x: dict, k: int, y: dict, s: int) -> dict:
    """Gamma(x, y) for x of degree k and y of degree s >= k; a degree s-k tensor."""
    if k > s:
        raise HodgeError(f"cannot contract degree {k} against degree {s}")
    g = gamma.matrix() if isinstance(gamma, Contraction) else gamma
    tail_mod = 4 ** (s - k)
    out: dict = {}
    for i, c in x.items():
        wa = index_word(i, k)
        cc = c.conjugate()
        for j, e in y.items():
            head, tail = divmod(j, tail_mod)
            wb = index_word(head, k)
            f = cc * e
            for a, b in zip(wa, wb):
                f = f * g[a][b]
                if f.is_zero():
                    break
            if not f.is_zero():
                vaccumulate(out, {tail: f})
    return out


def volume_form(m, direction: str = "+") -> ext.Form:
    """mu = A^(4) theta."""
    return ext.Form.from_preimage(ext.volume_tensor(as_scalar(m)), 4, direction)


# -- T and L on the eigenbasis ---------------------------------------------------------------

def _lambda_ratio(name: str, k: int, direction: str) -> ScalarQ:
    partner, _ = ext.star_partners(k, direction)[name]
    return ext.eigenvalue(partner, direction) / ext.eigenvalue(name, direction)


@lru_cache(maxsize=None)
def _shuffled_volume(m: ScalarQ, k: int, direction: str) -> dict:
    return ext.apply_shuffle(ext.volume_tensor(m), k, 4 - k, direction)


@lru_cache(maxsize=None)
def _T_basis(cfg: HodgeConfig, name: str, k: int) -> ext.Form:
    d = cfg.direction
    e = ext.basis_form(name, d)
    pre = contract(cfg.contraction, e.tensor, k, _shuffled_volume(cfg.m, k, d), 4)
    out = ext.star_form(ext.Form.from_preimage(pre, 4 - k, d))
    return out.scale(_lambda_ratio(name, k, d))


@lru_cache(maxsize=None)
def _L_basis(cfg: HodgeConfig, name: str, k: int) -> ext.Form:
    d = cfg.direction
    e = ext.basis_form(name, d)
    mu = volume_form(cfg.m, d)
    t = contract(cfg.contraction, e.tensor, k, mu.tensor, 4)
    out = ext.star_form(ext.Form.from_tensor(t, 4 - k, d))
    return out.scale(ext.eigenvalue(name, d).inverse())


def _apply(basis_op, cfg: HodgeConfig, xi: ext.Form) -> ext.Form:
    if xi.direction != cfg.direction:
        raise HodgeError("form and configuration use different braidings")
    out = ext.Form(4 - xi.k, cfg.direction, {}, {})
    for name, c in xi.coordinates().items():
        if not c.is_zero():
            out = out + basis_op(cfg, name, xi.k).scale(c)
    return out


def hodge_T(cfg: HodgeConfig, xi: ext.Form) -> ext.Form:
    return _apply(_T_basis, cfg, xi)


def hodge_L(cfg: HodgeConfig, xi: ext.Form) -> ext.Form:
    return _apply(_L_basis, cfg, xi)


def hodge_matrix(cfg: HodgeConfig, k: int, operator: str = "T") -> dict:
    """name -> eigenbasis coordinates of the image of each basis form of degree k."""
    op = _T_basis if operator == "T" else _L_basis
    return {e.name: op(cfg, e.name, k).coordinates() for e in ext.eigenbasis(k, cfg.direction)}


def basis(name: str, cfg_or_direction) -> ext.Form:
    d = cfg_or_direction.direction if isinstance(cfg_or_direction, HodgeConfig) else cfg_or_direction
    return ext.basis_form(name, d)


# -- reality and hermitianity ------------------------------------------------------------------

@dataclass
class Verdict:
    ok: bool
    witness: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _op(operator: str):
    if operator not in ("T", "L"):
        raise HodgeError(f"operator must be 'T' or 'L', got {operator!r}")
    return hodge_T if operator == "T" else hodge_L


def reality_residuals(cfg: HodgeConfig, operator: str = "T") -> dict:
    """op(omega_a^*) - (op(omega_a))^* for each 1-form, as eigenbasis coordinates."""
    op = _op(operator)
    out = {}
    for e in ext.eigenbasis(1, cfg.direction):
        lhs = op(cfg, ext.star_form(e.form))
        rhs = ext.star_form(op(cfg, e.form))
        out[e.name] = cfg.contraction.nonzero((lhs - rhs).coordinates())
    return out


def reality_conditions(g: Contraction, operator: str = "T") -> list:
    """The closed-form reality conditions that fail for g."""
    failed = []
    if operator == "T":
        if not g.equal(g.beta.conjugate(), Q ** 2 * g.alpha):
            failed.append("beta* = q^2 alpha")
        for n in ("nu", "epsilon", "xi", "gamma"):
            x = getattr(g, n)
            if not g.equal(x, x.conjugate()):
                failed.append(f"{n} real")
    else:
        failed.extend(_hrc_failures(g))
    return failed


def _hrc_failures(g: Contraction) -> list:
    failed = []
    if g.is_zero(g.alpha):
        failed.append("alpha != 0")
    if not g.equal(g.beta, Q ** 2 * g.alpha):
        failed.append("beta = q^2 alpha")
    if not g.equal(g.xi, g.epsilon):
        failed.append("xi = epsilon")
    for n in ("alpha", "nu", "epsilon", "gamma"):
        x = getattr(g, n)
        if not g.equal(x, x.conjugate()):
            failed.append(f"{n} real")
    return failed


def is_real(g: Contraction, operator: str = "T", m=None, direction: str = "+") -> Verdict:
    """Reality of the Hodge operator built from g, decided on the operator itself.

    For T this is T(omega_a^*) = T(omega_a)^*; for L the pair of conditions
    omega_a^* ^ L(omega_b) = Gamma(omega_a, omega_b) mu and L(omega^*) = L(omega)^*
    (the second half is the hermitianity part, see ``is_hermitian``).  The
    witness lists the closed-form conditions that fail.
    """
    cfg = HodgeConfig(g, symbol("m") if m is None else m, direction)
    res = reality_residuals(cfg, operator)
    ok = all(not v for v in res.values())
    return Verdict(ok, reality_conditions(g, operator) + [f"residual on {n}" for n, v in res.items() if v])


def hermitian_residuals(cfg: HodgeConfig) -> dict:
    """T^2(omega_a) + T^2(1) omega_a for each 1-form."""
    t2_1 = hodge_T(cfg, hodge_T(cfg, ext.scalar_form(ONE, cfg.direction))).scalar()
    out = {}
    for e in ext.eigenbasis(1, cfg.direction):
        r = hodge_T(cfg, hodge_T(cfg, e.form)) + e.form.scale(t2_1)
        out[e.name] = cfg.contraction.nonzero(r.coordinates())
    return out


def hermitian_conditions(g: Contraction) -> dict:
    """The four polynomial conditions that hermitianity of T reduces to.

    Values are the residuals (zero when the condition holds).  The last one
    is the quartic relation in the sign convention that the computation of
    T^2 produces.
    """
    q = Q
    a, b, nu, eps, xi, gam = (g.alpha, g.beta, g.nu, g.epsilon, g.xi, g.gamma)
    ab = a * b
    return {
        "beta = q^2 alpha": b - q ** 2 * a,
        "xi = epsilon": xi - eps,
        "cubic": eps ** 3 + ab * ((q ** 2 - q ** -2) * nu - (q - q ** -1) ** 2 * eps),
        "quartic": gam ** 2 * nu - ab * ((q ** 2 - q ** -2) * eps + 2 * (q + q ** -1) ** 2 * nu
                                         + (q - q ** -1) ** 2 * gam),
    }


def published_quartic(g: Contraction) -> ScalarQ:
    """The quartic hermitianity relation with the signs as published."""
    q = Q
    ab = g.alpha * g.beta
    return g.gamma ** 2 * g.nu - ab * ((q ** 2 - q ** -2) * g.epsilon - 2 * (q + q ** -1) ** 2 * g.nu
                                       - (q - q ** -1) ** 2 * g.gamma)


def t_of_mu(cfg: HodgeConfig) -> ScalarQ:
    return hodge_T(cfg, volume_form(cfg.m, cfg.direction)).scalar()


def is_hermitian(g: Contraction, operator: str = "T", m=None, direction: str = "+") -> Verdict:
    """Hermitianity (plus invertibility) decided on the operator.

    T: T^2(omega_a) = -T^2(1) omega_a for all a, and T(mu) != 0.
    L: the conditions of ``is_real(g, "L")`` plus Gamma(mu, mu) != 0.
    The closed-form witness conditions refer to the plus direction.
    """
    cfg = HodgeConfig(g, symbol("m") if m is None else m, direction)
    if operator == "T":
        res = hermitian_residuals(cfg)
        witness = [n for n, v in hermitian_conditions(g).items() if not g.is_zero(v)]
        witness += [f"residual on {n}" for n, v in res.items() if v]
        ok = all(not v for v in res.values())
        if g.is_zero(t_of_mu(cfg)):
            ok = False
            witness.append("T(mu) = 0")
        return Verdict(ok, witness)
    _op(operator)
    witness = _hrc_failures(g)
    witness += [f"pairing {a}{b}" for a, b in _L_pairing_failures(cfg)]
    res = reality_residuals(cfg, "L")
    witness += [f"L residual on {n}" for n, v in res.items() if v]
    mu = volume_form(cfg.m, direction)
    if g.is_zero(contract(g, mu.tensor, 4, mu.tensor, 4).get(0, ZERO)):
        witness.append("Gamma(mu, mu) = 0")
    return Verdict(not witness, witness)


def forms_differ(g: Contraction, x: ext.Form, y: ext.Form) -> bool:
    return bool(g.nonzero((x - y).coordinates()))


def _L_pairing_failures(cfg: HodgeConfig) -> list:
    """Pairs (a, b) where omega_a^* ^ L(omega_b) != Gamma(omega_a, omega_b) mu."""
    mu = volume_form(cfg.m, cfg.direction)
    g = cfg.contraction.matrix()
    bad = []
    forms = ext.eigenbasis(1, cfg.direction)
    for ia, ea in enumerate(forms):
        for ib, eb in enumerate(forms):
            lhs = ext.wedge(ext.star_form(ea.form), hodge_L(cfg, eb.form))
            if forms_differ(cfg.contraction, lhs, mu.scale(g[ia][ib])):
                bad.append((ea.name, eb.name))
    return bad


def _require_real_hermitian(g: Contraction, operator: str = "T", direction: str = "+"):
    if not is_real(g, operator, direction=direction) or not is_hermitian(g, operator, direction=direction):
        raise HodgeError(f"contraction is not real and hermitian for {operator}{direction}")


def classify_family(g: Contraction, operator: str = "T") -> str:
    """'a', 'b', 'c' for real hermitian invertible contractions, else 'none'."""
    if not is_real(g, operator) or not is_hermitian(g, operator):
        return "none"
    if operator == "L":
        # L imposes only the linear conditions; the family is read off the
        # maximal-hermitianity constraints, which single out (a).
        return "a" if is_maximally_hermitian(g, "+", operator) else "none"
    if g.is_zero(g.nu):
        return "a"
    if g.is_zero(g.gamma):
        return "c"
    return "b"


def square_on_degree(cfg: HodgeConfig, k: int, operator: str = "T") -> dict:
    """name -> coordinates of op^2 on each basis form of degree k."""
    op = _op(operator)
    return {e.name: op(cfg, op(cfg, e.form)).coordinates() for e in ext.eigenbasis(k, cfg.direction)}


def is_maximally_hermitian(g: Contraction, direction: str = "+", operator: str = "T", m=None) -> bool:
    """op^2 on 2-forms is diagonal with one scalar per antisymmetrizer eigenvalue.

    Raises HodgeError unless g is real and hermitian for the plus operator.
    In the minus direction a contraction that fails hermitianity for the
    minus operator (families b and c do) is not maximally hermitian.
    """
    _require_real_hermitian(g, operator)
    if check_direction(direction) == "-":
        try:
            _require_real_hermitian(g, operator, "-")
        except HodgeError:
            return False
    cfg = HodgeConfig(g, symbol("m") if m is None else m, direction)
    sq = square_on_degree(cfg, 2, operator)
    per_eigenvalue: dict = {}
    for e in ext.eigenbasis(2, cfg.direction):
        coords = sq[e.name]
        if any(not g.is_zero(v) for n, v in coords.items() if n != e.name):
            return False
        per_eigenvalue.setdefault(e.eigenvalue, []).append(coords.get(e.name, ZERO))
    return all(g.is_zero(x - vals[0]) for vals in per_eigenvalue.values() for x in vals)


# -- determinant, normalization, duality ---------------------------------------------

def _sample_points(x: ScalarQ):
    names = sorted(x.free_symbols() - {"s"})
    for sample in (1, Fraction(3, 2), -2):
        yield {n: sample for n in names}


def sign_of(x: ScalarQ, q0=SAMPLE_Q) -> int:
    """Sign of a real element at q = q0, required to agree over parameter samples."""
    signs = set()
    for point in _sample_points(x):
        v = eval_at(x.subs(point), q0) if point else eval_at(x, q0)
        r = v.as_fraction()
        if r == 0:
            raise ScalarError(f"{x} vanishes at a sample point")
        signs.add(1 if r > 0 else -1)
    if len(signs) != 1:
        raise ScalarError(f"sign of {x} depends on the parameters")
    return signs.pop()


def detq(g: Contraction, direction: str = "+") -> ScalarQ:
    """Gamma(i w-(x)w+(x)w0(x)wz, i w-^w+^w0^wz)."""
    theta = {word_index("-+0z"): I}
    top = ext.antisymmetrize(theta, 4, check_direction(direction))
    return contract(g, theta, 4, top, 4).get(0, ZERO)


def detq_and_sign(cfg: HodgeConfig, q0=SAMPLE_Q):
    d = detq(cfg.contraction, cfg.direction)
    if d.is_zero():
        raise HodgeError("det_q vanishes")
    return d, sign_of(d, q0)


def normalize_m(g: Contraction, q0=SAMPLE_Q) -> ScalarQ:
    """Positive m with m^2 alpha beta epsilon^2 = 1 (family (a) only)."""
    if classify_family(g) != "a":
        raise HodgeError("normalization is defined for family (a) contractions")
    x = g.alpha * g.beta * g.epsilon ** 2
    if g.is_zero(x):
        raise HodgeError("alpha beta epsilon^2 vanishes")
    m = x.sqrt().inverse()
    return m if sign_of(m, q0) > 0 else -m


@dataclass
class Check:
    tag: str
    subject: str
    ok: bool
    lhs: str = ""
    rhs: str = ""

    def as_dict(self) -> dict:
        d = {"identity": self.tag, "subject": self.subject, "pass": self.ok}
        if not self.ok:
            d["lhs"], d["rhs"] = self.lhs, self.rhs
        return d


def _check(tag, subject, lhs, rhs) -> Check:
    ok = lhs == rhs
    return Check(tag, subject, ok, "" if ok else repr(lhs), "" if ok else repr(rhs))


def to_direction(x: ext.Form, direction: str) -> ext.Form:
    """The same tensor read in the other exterior algebra (ranges coincide)."""
    if x.direction == check_direction(direction):
        return x
    return ext.Form.from_tensor(x.tensor, x.k, direction)


def verify_duality_identities(g: Contraction, m=None) -> list[Check]:
    """Reality, square and product identities of T, and L = T, for a family (a) contraction.

    Identity names: "T reality", "T square", "T+T- product", "L = T" and
    "L reality"; the subject carries the form name and the direction.
    """
    if m is None:
        m = normalize_m(g)
    checks = []
    cfgs = {d: HodgeConfig(g, m, d) for d in "+-"}
    sgn = {d: detq_and_sign(cfgs[d])[1] for d in "+-"}
    for d, cfg in cfgs.items():
        tag_r, tag_s = "T reality", "T square"
        for k in range(5):
            partners = ext.star_partners(k, d)
            for e in ext.eigenbasis(k, d):
                xi = e.form
                lam = e.eigenvalue
                lam_star = ext.eigenvalue(partners[e.name][0], d)
                t = hodge_T(cfg, xi)
                checks.append(_check(tag_r, f"{e.name} [{d}]", ext.star_form(t).scale(lam_star),
                                     hodge_T(cfg, ext.star_form(xi)).scale(lam)))
                sign = (-1) ** (k * (4 - k)) * sgn[d]
                checks.append(_check(tag_s, f"{e.name} [{d}]", hodge_T(cfg, t),
                                     xi.scale(sign * lam / lam_star)))
                other = cfgs["-" if d == "+" else "+"]
                tt = hodge_T(cfg, to_direction(hodge_T(other, to_direction(xi, other.direction)), d))
                checks.append(_check("T+T- product", f"{e.name} [{d}]", tt, xi.scale(sign)))
                if 1 <= k <= 3:
                    lx = hodge_L(cfg, xi)
                    checks.append(_check("L = T", f"{e.name} [{d}]", lx, t))
                    checks.append(_check("L reality", f"{e.name} [{d}]", ext.star_form(lx).scale(lam_star),
                                         hodge_L(cfg, ext.star_form(xi)).scale(lam)))
    return checks


def star_extend(cfg: HodgeConfig, side: str, x, omega: ext.Form):
    """Left (x omega -> x T(omega)) or right (omega x -> T(omega) x) extension."""
    if side not in ("L", "R"):
        raise HodgeError("side must be 'L' or 'R'")
    image = hodge_T(cfg, omega)
    return (x, image) if side == "L" else (image, x)
