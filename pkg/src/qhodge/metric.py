"""Metrics g(omega_a, omega_b) = Gamma(omega_a^*, omega_b) and the sigma-metric axioms.

Everything here lives on the 4-dimensional space of left-invariant 1-forms,
where a metric is just a constant 4x4 matrix.  The bimodule-homomorphism and
left-covariance axioms hold automatically for such matrices and are reported
as structural rather than tested.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import calculus
from .calculus import CHARGES, STAR_LABEL, LABELS
from .exterior import apply_sigma
from .hodge import Contraction, HodgeError, classify_family
from .linalg import determinant
from .scalar import ONE, ZERO, ScalarQ, as_scalar


@dataclass(frozen=True)
class MetricMatrix:
    entries: tuple  # 4 rows of 4 ScalarQ

    @classmethod
    def from_rows(cls, rows) -> "MetricMatrix":
        rows = tuple(tuple(as_scalar(v) for v in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("a metric is a 4x4 matrix")
        return cls(rows)

    def __getitem__(self, ab):
        a, b = ab
        return self.entries[a][b]

    def as_vector(self) -> dict:
        """The metric as a linear form on V (x) V, index 4a + b."""
        return {4 * a + b: v for a, row in enumerate(self.entries) for b, v in enumerate(row)
                if not v.is_zero()}


def metric_from_contraction(g: Contraction) -> MetricMatrix:
    """g_ab = Gamma(omega_a^*, omega_b) = -Gamma_{a*, b} (Gamma is antilinear in slot 1)."""
    gam = g.matrix()
    rows = [[-gam[STAR_LABEL[a]][b] for b in range(4)] for a in range(4)]
    return MetricMatrix.from_rows(rows)


def contraction_from_metric(metric: MetricMatrix) -> Contraction:
    """Invert ``metric_from_contraction``; requires the U(1) zero pattern."""
    gam = [[-metric[STAR_LABEL[c], b] for b in range(4)] for c in range(4)]
    for c in range(4):
        for b in range(4):
            if CHARGES[c] != CHARGES[b] and not gam[c][b].is_zero():
                raise HodgeError("metric violates the U(1) zero pattern")
    return Contraction(gam[0][0], gam[1][1], gam[2][2], gam[2][3], gam[3][2], gam[3][3])


def zero_pattern_violations(metric: MetricMatrix) -> list:
    return [(LABELS[a], LABELS[b]) for a in range(4) for b in range(4)
            if CHARGES[a] + CHARGES[b] != 0 and not metric[a, b].is_zero()]


@dataclass
class AxiomResult:
    name: str
    status: str  # "pass", "fail" or "structural"
    counterexample: list = field(default_factory=list)

    def as_dict(self) -> dict:
        d = {"axiom": self.name, "status": self.status}
        if self.counterexample:
            d["counterexample"] = self.counterexample
        return d


def _apply_form(vec: dict, k: int, g: MetricMatrix, slot: int) -> dict:
    """Contract slots (slot, slot+1) (1-based) of a degree-k tensor with g."""
    out: dict = {}
    gv = g.as_vector()
    for idx, c in vec.items():
        word = calculus.index_word(idx, k)
        pair = 4 * word[slot - 1] + word[slot]
        if pair not in gv:
            continue
        rest = word[:slot - 1] + word[slot + 1:]
        n = calculus.word_index(rest) if rest else 0
        val = out.get(n, ZERO) + c * gv[pair]
        if val.is_zero():
            out.pop(n, None)
        else:
            out[n] = val
    return out


def _symmetry_failures(g: MetricMatrix, direction: str) -> list:
    bad = []
    for j in range(16):
        lhs = _apply_form(apply_sigma({j: ONE}, 2, 1, direction), 2, g, 1).get(0, ZERO)
        rhs = g.as_vector().get(j, ZERO)
        if lhs != rhs:
            bad.append("".join(LABELS[d] for d in calculus.index_word(j, 2)))
    return bad


def _braided_failures(g: MetricMatrix, direction: str) -> list:
    """(g (x) 1) sigma_2 = (1 (x) g) sigma_1^{-1} on V^{(x)3}, sigma in ``direction``."""
    other = "-" if direction == "+" else "+"
    bad = []
    for j in range(64):
        e = {j: ONE}
        lhs = _apply_form(apply_sigma(e, 3, 2, direction), 3, g, 1)
        rhs = _apply_form(apply_sigma(e, 3, 1, other), 3, g, 2)
        if lhs != rhs:
            bad.append("".join(LABELS[d] for d in calculus.index_word(j, 3)))
    return bad


def _reality_failures(g: MetricMatrix) -> list:
    """(g(w_a, w_b))^* = g(w_b^*, w_a^*) = g_{b*, a*} (the two star signs cancel)."""
    return [(LABELS[a], LABELS[b]) for a in range(4) for b in range(4)
            if g[a, b].conjugate() != g[STAR_LABEL[b], STAR_LABEL[a]]]


def check_sigma_metric(g: MetricMatrix) -> list[AxiomResult]:
    out = [AxiomResult("bimodule homomorphism", "structural")]
    det = determinant([list(r) for r in g.entries])
    out.append(AxiomResult("nondegenerate", "fail" if det.is_zero() else "pass"))
    for d in "+-":
        bad = _symmetry_failures(g, d)
        out.append(AxiomResult(f"symmetry g.sigma{d} = g", "fail" if bad else "pass", bad))
    for d in "+-":
        bad = _braided_failures(g, d)
        other = "-" if d == "+" else "+"
        out.append(AxiomResult(f"(g x 1) sigma{d}_2 = (1 x g) sigma{other}_1",
                               "fail" if bad else "pass", bad))
    bad = _reality_failures(g)
    out.append(AxiomResult("reality", "fail" if bad else "pass", bad))
    out.append(AxiomResult("left covariance", "structural"))
    return out


def passes_sigma_axioms(g: MetricMatrix) -> bool:
    return all(r.status != "fail" for r in check_sigma_metric(g))


IN_G_SIGMA = "in G_sigma"
IN_G_ONLY = "in G minus G_sigma"
NOT_IN_G = "not in G"


def classify_metric(g: MetricMatrix) -> str:
    """Membership in the family-(a) metrics G and in the sigma-metric subset."""
    if zero_pattern_violations(g):
        return NOT_IN_G
    try:
        family = classify_family(contraction_from_metric(g))
    except HodgeError:
        return NOT_IN_G
    if family != "a":
        return NOT_IN_G
    return IN_G_SIGMA if passes_sigma_axioms(g) else IN_G_ONLY
