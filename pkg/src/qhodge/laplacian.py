"""Laplacians Box^L, Box^R on the coordinate algebra and their spectra on phi_{n,J,l}.

    Box^L = alpha {L+L- + q^2 L-L+ -/+ (1+q^2) LzLz +/- 2(q^2-1) L0Lz}
    Box^R = alpha {q^2 R+R- + R-R+ -/+ (1+q^2) RzRz +/- 2(q^2-1) R0Rz}

The upper/lower sign pair is the Z_2 of the family-(a) metrics.  Which sign
belongs to the sigma-metric branch is decided by ``branch_sign`` from the
operator identity that collapses Box^L to 2q alpha L0, not from typography.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qalgebra import (AlgebraElement, UqElement, act, build_phi, eigen_ratio,
                       right_op, tangent_op, valid_nJ)
from .scalar import ONE, Q, ScalarQ, as_scalar, eval_at, qnum

BRANCHES = ("sigma", "other")
SIDES = ("L", "R")
# Box^R's derivations: applied through the left action (R_a |> x) or the right one.
R_ACTIONS = ("left", "right")
DEFAULT_DEGREE_CAP = 12


class LaplacianError(ValueError):
    pass


def _ops(side: str):
    if side == "L":
        return {lab: tangent_op(lab) for lab in "-+0z"}
    if side == "R":
        return {lab: right_op(lab) for lab in "-+0z"}
    raise LaplacianError(f"side must be L or R, got {side!r}")


def box_operator(side: str, sign: int, alpha=ONE) -> UqElement:
    """The bracket of Box with the upper (sign=+1) or lower (sign=-1) sign pair."""
    if sign not in (1, -1):
        raise LaplacianError("sign must be +1 or -1")
    o = _ops(side)
    q = Q
    if side == "L":
        head = o["+"] * o["-"] + (o["-"] * o["+"]).scale(q ** 2)
    else:
        head = (o["+"] * o["-"]).scale(q ** 2) + o["-"] * o["+"]
    tail = (o["z"] * o["z"]).scale(-sign * (1 + q ** 2)) + (o["0"] * o["z"]).scale(sign * 2 * (q ** 2 - 1))
    return (head + tail).scale(as_scalar(alpha))


def _samples():
    return [(n, tj) for n, tj in valid_nJ(2, 4)]


@lru_cache(maxsize=None)
def branch_sign(branch: str) -> int:
    """Sign pair of Box^L belonging to ``branch``.

    The sigma branch is the unique sign for which the bracket equals 2q L0 on
    every sampled phi_{n,J,l} (J <= 2).
    """
    if branch not in BRANCHES:
        raise LaplacianError(f"branch must be one of {BRANCHES}")
    matches = []
    for sign in (1, -1):
        op = box_operator("L", sign) - tangent_op("0").scale(2 * Q)
        if all(act(op, build_phi(n, tj, l)).is_zero()
               for n, tj in _samples() for l in range(tj + 1)):
            matches.append(sign)
    if len(matches) != 1:
        raise LaplacianError(f"expected exactly one collapsing sign, found {matches}")
    return matches[0] if branch == "sigma" else -matches[0]


def box_apply(side: str, branch: str, alpha, x: AlgebraElement, r_action: str = "left",
              degree_cap: int = DEFAULT_DEGREE_CAP) -> AlgebraElement:
    if x.degree() > degree_cap:
        raise LaplacianError(f"element degree {x.degree()} exceeds the cap {degree_cap}")
    op = box_operator(side, branch_sign(branch), alpha)
    if side == "R":
        if r_action not in R_ACTIONS:
            raise LaplacianError(f"r_action must be one of {R_ACTIONS}")
        return act(op, x, r_action)
    return act(op, x, "left")


def oracle_eigenvalue(side: str, branch: str, alpha, n: int, two_j: int, r_action: str = "left"):
    """Common eigenvalue of Box on phi_{n,J,l} over all l, or None if not diagonal."""
    value = None
    for l in range(two_j + 1):
        phi = build_phi(n, two_j, l)
        r = eigen_ratio(box_apply(side, branch, alpha, phi, r_action), phi)
        if r is None or (value is not None and r != value):
            return None
        value = r
    return value


def lambda_z(n: int) -> ScalarQ:
    """L_z eigenvalue on phi_{n,J,l}: (q^{-n} - 1)/(q - q^{-1})."""
    return (Q ** -n - 1) / (Q - Q ** -1)


def casimir_value(two_j: int) -> ScalarQ:
    """[J][J+1] with J = two_j/2."""
    return qnum(two_j) * qnum(two_j + 2)


def box_eigenvalue(side: str, branch: str, alpha, n: int, two_j: int) -> ScalarQ:
    """Closed-form eigenvalue, cross-checked against ``oracle_eigenvalue``.

    Both sides agree on the sigma branch.  On the other branch Box^R (with
    R_a acting from the left) has the Box^L eigenvalue at charge -n.
    """
    if side not in SIDES:
        raise LaplacianError(f"side must be L or R, got {side!r}")
    if two_j < abs(n) or (two_j - abs(n)) % 2:
        raise LaplacianError(f"invalid (n, J) = ({n}, {two_j}/2)")
    alpha = as_scalar(alpha)
    cas = casimir_value(two_j)
    base = 2 * Q * alpha * cas
    if branch == "sigma":
        return base
    if branch != "other":
        raise LaplacianError(f"branch must be one of {BRANCHES}")
    lz = lambda_z(n if side == "L" else -n)
    return base - 2 * (1 + Q ** 2) * alpha * lz * lz + 4 * (Q ** 2 - 1) * alpha * cas * lz


def deltaq_eigenvalue(n: int, two_j: int) -> ScalarQ:
    """Eigenvalue of Box^L + ((q-q^{-1})/(q+q^{-1}))^2 L0^2 at alpha = 1/(q^2+1)."""
    cas = casimir_value(two_j)
    alpha = (Q ** 2 + 1) ** -1
    ratio = (Q - Q ** -1) / (Q + Q ** -1)
    return box_eigenvalue("L", "sigma", alpha, n, two_j) + ratio ** 2 * cas ** 2


def format_j(two_j: int) -> str:
    return str(two_j // 2) if two_j % 2 == 0 else f"{two_j}/2"


@dataclass
class SpectrumEntry:
    n: int
    two_j: int
    side: str
    branch: str
    alpha: ScalarQ
    eigenvalue: ScalarQ
    value: Fraction | None = None

    def as_dict(self) -> dict:
        d = {"n": self.n, "J": format_j(self.two_j), "side": self.side, "branch": self.branch,
             "alpha": str(self.alpha), "eigenvalue": str(self.eigenvalue)}
        if self.value is not None:
            d["value"] = str(self.value)
        return d


@dataclass
class SpectrumScan:
    entries: list
    minimum: Fraction
    maximum: Fraction
    has_negative: bool
    has_positive: bool

    def as_dict(self) -> dict:
        return {"entries": [e.as_dict() for e in self.entries], "min": str(self.minimum),
                "max": str(self.maximum), "has_negative": self.has_negative,
                "has_positive": self.has_positive}


def scan_spectrum(branch: str, alpha=ONE, q0=Fraction(1, 2), nmax: int = 8, two_jmax: int = 8,
                  side: str = "L") -> SpectrumScan:
    alpha = as_scalar(alpha)
    if alpha.is_zero() or not alpha.is_real():
        raise LaplacianError("alpha must be a nonzero real scalar")
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise LaplacianError("q0 must lie in (0, 1)")
    entries = []
    for n, tj in valid_nJ(nmax, two_jmax):
        ev = box_eigenvalue(side, branch, alpha, n, tj)
        entries.append(SpectrumEntry(n, tj, side, branch, alpha, ev, _real_value(ev, q0)))
    values = [e.value for e in entries]
    return SpectrumScan(entries, min(values), max(values), any(v < 0 for v in values),
                        any(v > 0 for v in values))


def _real_value(x: ScalarQ, q0: Fraction) -> Fraction:
    v = eval_at(x, q0)
    if not v.is_real():
        raise LaplacianError(f"eigenvalue {x} is not real at q = {q0}")
    return v.as_fraction()
