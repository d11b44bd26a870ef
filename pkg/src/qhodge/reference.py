"""Published closed forms used as regression targets.

Each table maps a basis-form name to the expected eigenbasis coordinates of
its image, as a function of the contraction parameters and the scale m.  The
entries are transcribed verbatim, including the ones the computation does not
reproduce; ``compare`` reports the mismatching entries instead of hiding them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .hodge import Contraction
from .scalar import I, Q, ZERO, ScalarQ


def _c(x: ScalarQ) -> ScalarQ:
    return x.conjugate()


def hodge_1forms(g: Contraction, m) -> dict:
    """T+ on 1-forms for a general coinvariant contraction."""
    im = I * m
    a, b, nu, eps, xi, gam = (g.alpha, g.beta, g.nu, g.epsilon, g.xi, g.gamma)
    return {
        "omega-": {"chi+": im * _c(a)},
        "omega+": {"chi-": -im * _c(b)},
        "omega0": {"chi0": -im * _c(nu), "chiz": im * _c(eps)},
        "omegaz": {"chi0": -im * _c(xi), "chiz": im * _c(gam)},
    }


def hodge_3forms(g: Contraction, m) -> dict:
    """T+ on 3-forms for a real contraction."""
    q = Q
    im = I * m
    a, b, nu, eps, xi, gam = (g.alpha, g.beta, g.nu, g.epsilon, g.xi, g.gamma)
    ab_ = _c(a * b)
    d = nu * gam - eps * xi
    w = 1 - q ** 2 - q ** -2
    return {
        "chi-": {"omega+": -im * q ** -2 * _c(b) * d},
        "chi+": {"omega-": im * q ** 2 * _c(a) * d},
        "chi0": {"omega0": im * (gam ** 2 * nu + ab_ * (w * gam - 2 * (q + q ** -1) ** 2 * nu
                                                         - (q ** 2 - q ** -2) * xi)),
                 "omegaz": im * ab_ * xi},
        "chiz": {"omega0": im * (eps ** 2 * xi + ab_ * ((q ** 2 - q ** -2) * nu + w * eps)),
                 "omegaz": im * ab_ * nu},
    }


def hodge_extremes(g: Contraction, m) -> dict:
    """T+(1) = mu and the scalar T+(mu); mu is i m times the basis 4-form "vol"."""
    d = g.nu * g.gamma - g.epsilon * g.xi
    return {"1": {"vol": I * m}, "mu": {"1": m ** 2 * _c(g.alpha * g.beta) * _c(d)}}


def hodge_2forms(g: Contraction, m) -> dict:
    """T+ on 2-forms for a real contraction with beta = q^2 alpha and xi = epsilon."""
    q = Q
    im = I * m
    a, b, nu, eps, gam = g.alpha, g.beta, g.nu, g.epsilon, g.gamma
    ab = a * b
    u = q ** 2
    ui = q ** -2
    ka = -im * a
    kb = -im * b
    ks = -im / (1 + u)
    return {
        "phi+": {"phi+": ka * (u * eps + (u + 1 - ui) / (u - 1) * nu), "kappa-": ka * nu / (1 - u)},
        "kappa-": {"phi+": ka * ((q ** 4 + u) * eps + (q ** 4 - u) * gam + (q ** 6 - u + 1) / (u - 1) * nu),
                   "kappa-": ka * (-eps + nu / (1 - u))},
        "phi-": {"phi-": kb * (-ui * eps + (ui + 1 - u) / (ui - 1) * nu), "kappa+": kb * nu / (1 - ui)},
        "kappa+": {"phi-": kb * (-(q ** -4 + ui) * eps + (q ** -4 - ui) * gam
                                 + (q ** -6 - ui + 1) / (ui - 1) * nu),
                   "kappa+": kb * (eps + nu / (1 - ui))},
        "psi-": {"psi-": ks * ((1 - u - ui) / (1 - ui) * nu * gam + (2 - u) / (1 - ui) * eps ** 2
                               + (u - 1) * (u + ui - 1) * ab),
                 "psi+": ks * ((2 * u - 1) / (1 - ui) * nu * gam + (-q ** 4 + u - 1) / (1 - ui) * eps ** 2
                               + (u - 1) * (q ** 4 + 1 - u) * ab)},
        "psi+": {"psi-": ks * ((1 - 2 * ui) / (1 - ui) * nu * gam + (1 - ui - q ** -4) / (1 - ui) * eps ** 2
                               + (ui - 1) * (u + ui - 1) * ab),
                 "psi+": ks * ((u - 1 + ui) / (1 - ui) * nu * gam + (ui - 2) / (1 - ui) * eps ** 2
                               + (1 - u) * (u + ui - 1) * ab)},
    }


def hodge_2forms_family_a(g: Contraction, m, direction: str) -> dict:
    """T on 2-forms for a real maximally hermitian contraction (diagonal)."""
    q = Q
    im = I * m
    a, b, eps = g.alpha, g.beta, g.epsilon
    if direction == "+":
        diag = {"phi+": -im * q ** 2 * a * eps, "kappa+": -im * q ** 2 * a * eps,
                "psi+": im * (q ** 2 - 1) * a * b, "phi-": im * a * eps, "kappa-": im * a * eps,
                "psi-": -im * (1 - q ** -2) * a * b}
    else:
        diag = {"phi+": -im * a * eps, "kappa+": -im * a * eps, "psi+": -im * (q ** -2 - 1) * a * b,
                "phi-": im * q ** 2 * a * eps, "kappa-": im * q ** 2 * a * eps,
                "psi-": im * (1 - q ** 2) * a * b}
    return {n: {n: v} for n, v in diag.items()}


def antisymmetrizer_eigenvalues(direction: str) -> dict:
    """Eigenvalue of A^(k) on each named eigenform, as published."""
    q = Q
    up, down = 1 + q ** 2, 1 + q ** -2
    if direction == "+":
        two = {"phi+": up, "kappa+": up, "psi+": up, "phi-": down, "kappa-": down, "psi-": down}
    else:
        two = {"phi+": down, "kappa+": down, "psi+": down, "phi-": up, "kappa-": up, "psi-": up}
    three = {n: 2 * (1 + q ** 2 + q ** -2) for n in ("chi-", "chi+", "chi0", "chiz")}
    four = {"vol": 2 * (q ** 4 + 2 * q ** 2 + 6 + 2 * q ** -2 + q ** -4)}
    return {2: two, 3: three, 4: four}


def volume_self_pairing(g: Contraction, m) -> ScalarQ:
    """Gamma(mu, mu) for family (a)."""
    q = Q
    return -2 * (q + q ** -1) ** 2 * (q ** 2 + 1 + q ** -2) * m ** 2 * g.alpha * g.beta * g.epsilon ** 2


def detq_family_a(g: Contraction) -> ScalarQ:
    return -Q ** 2 * (1 - Q ** 2) ** 2 * g.alpha ** 4


@dataclass
class TableComparison:
    name: str
    mismatches: list = field(default_factory=list)  # (row, column, computed, expected)
    entries: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {"table": self.name, "pass": self.ok, "entries": self.entries,
                "mismatches": [{"row": r, "column": c, "computed": str(x), "expected": str(y)}
                               for r, c, x, y in self.mismatches]}


def compare(name: str, computed: dict, expected: dict, g: Contraction | None = None) -> TableComparison:
    """Entrywise comparison of two name -> coordinates tables (rows of ``expected``)."""
    out = TableComparison(name)
    for row, exp in expected.items():
        got = computed.get(row, {})
        for col in sorted(set(exp) | set(got)):
            x = got.get(col, ZERO)
            y = exp.get(col, ZERO)
            y = y if isinstance(y, ScalarQ) else ScalarQ(y)
            diff = x - y
            zero = g.is_zero(diff) if g is not None else diff.is_zero()
            out.entries += 1
            if not zero:
                out.mismatches.append((row, col, x, y))
    return out
