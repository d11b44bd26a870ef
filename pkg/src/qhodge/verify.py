"""Named identity suites shared by the command line and the test-suite.

Every check is a ``hodge.Check``; a suite is a function returning a list of
them.  Checks named "published ..." compare against published closed forms
and are expected to fail where those forms carry a misprint.
"""
from __future__ import annotations

import math
from fractions import Fraction

from . import calculus, exterior as ext, hodge, laplacian as lap, metric, qalgebra as qa
from . import reference as ref
from .hodge import Check, Contraction, HodgeConfig
from .linalg import vadd
from .scalar import I, ONE, Q, ZERO, complex_symbol, eval_at, qnum, symbol

SUITES = ("braiding", "exterior", "hodge", "metric", "oracle", "laplacian")


def _ok(tag: str, subject: str, ok: bool, detail: str = "") -> Check:
    return Check(tag, subject, bool(ok), "" if ok else detail, "")


def _eq(tag: str, subject: str, lhs, rhs) -> Check:
    ok = lhs == rhs
    return Check(tag, subject, ok, "" if ok else str(lhs), "" if ok else str(rhs))


def _table(tag: str, subject: str, cmp: ref.TableComparison) -> Check:
    detail = "; ".join(f"{r}->{c}: {x} != {y}" for r, c, x, y in cmp.mismatches)
    return Check(tag, subject, cmp.ok, detail, f"{cmp.entries} entries")


# -- braiding -----------------------------------------------------------------------

def corrupted_columns(direction: str = "+") -> tuple:
    """The braiding with one entry perturbed (the (0+, +0) entry gains 1)."""
    cols = [dict(c) for c in calculus.braiding_columns(direction)]
    i, j = calculus.pair("0", "+"), calculus.pair("+", "0")
    cols[i][j] = cols[i].get(j, ZERO) + ONE
    return tuple(cols)


def braiding_suite(fault: bool = False) -> list[Check]:
    out = []
    bad = [j for j in range(16)
           if ext.apply_sigma(ext.apply_sigma({j: ONE}, 2, 1, "-"), 2, 1, "+") != {j: ONE}]
    out.append(_ok("braiding inverse", "sigma+ sigma- = id on V(x)V", not bad, f"fails on {bad}"))
    for d in "+-":
        cols = corrupted_columns(d) if fault and d == "+" else None
        s = lambda v, j: ext.apply_sigma(v, 3, j, d, cols)  # noqa: E731
        bad = [j for j in range(64) if s(s(s({j: ONE}, 1), 2), 1) != s(s(s({j: ONE}, 2), 1), 2)]
        out.append(_ok("braid equation", f"sigma{d} on V(x)V(x)V", not bad,
                       f"fails on {len(bad)} basis vectors"))
    for d in "+-":
        roots = (ONE, -Q ** 2, -Q ** -2)
        cols = calculus.braiding_columns(d)

        def shifted(vec, r):
            return vadd(ext.apply_sigma(vec, 2, 1, d), vec, -r)

        def product(vec, rs):
            for r in rs:
                vec = shifted(vec, r)
            return vec

        kills = all(not product({j: ONE}, roots) for j in range(16))
        proper = all(any(product({j: ONE}, [r for r in roots if r != skip]) for j in range(16))
                     for skip in roots)
        out.append(_ok("braiding minimal polynomial", f"sigma{d} roots 1, -q^2, -q^-2",
                       kills and proper))
        dims = [16 - ext.operator_rank(cols, 2, r) for r in roots]
        out.append(_eq("braiding eigenspaces", f"sigma{d} multiplicities", dims, [10, 3, 3]))
    return out


# -- exterior ------------------------------------------------------------------------

def _spectrum_map(k: int, d: str) -> dict:
    return {v: mlt for v, mlt in ext.spectral_report(k, d).eigenvalues}


def exterior_suite() -> list[Check]:
    out = []
    q = Q
    for d in "+-":
        pub = ref.antisymmetrizer_eigenvalues(d)
        sp = _spectrum_map(2, d)
        out.append(_eq("A2 spectrum", f"A2{d}", sp, {ZERO: 10, 1 + q ** 2: 3, 1 + q ** -2: 3}))
        for k in (2, 3):
            got = {e.name: e.eigenvalue for e in ext.eigenbasis(k, d)}
            out.append(_eq(f"A{k} eigenforms", f"A{k}{d}", got, pub[k]))
        sp4 = _spectrum_map(4, d)
        out.append(_eq("A4 rank", f"A4{d}", ext.spectral_report(4, d).rank, 1))
        lam4 = ext.eigenvalue("vol", d)
        out.append(_eq("A4 eigenvalue", f"A4{d} computed", lam4,
                       2 * (q ** 4 + 3 * q ** 2 + 4 + 3 * q ** -2 + q ** -4)))
        out.append(_eq("published A4 eigenvalue", f"A4{d}", lam4, pub[4]["vol"]))
        out.append(_eq("A4 spectrum", f"A4{d}", sp4, {ZERO: 255, lam4: 1}))
        cols5 = ext.antisymmetrizer_columns(5, d)
        out.append(_ok("A5 vanishes", f"A5{d}", all(not c for c in cols5)))
    for e in ext.eigenbasis(2, "+"):
        power = -2 if e.name.endswith("+") else 2
        minus = ext.basis_form(e.name, "-").tensor
        out.append(_eq("minus 2-forms", f"{e.name} check = q^{power} {e.name}", minus,
                       ext.Form.from_tensor(e.form.tensor, 2, "+").scale(q ** power).tensor))
    for k in (3, 4):
        for e in ext.eigenbasis(k, "+"):
            out.append(_eq("minus forms", f"{e.name} check = {e.name}",
                           ext.basis_form(e.name, "-").tensor, e.form.tensor))
    for k in (2, 3, 4):
        for d in "+-":
            vals = {eval_at(v, 1).as_fraction() for v, _ in ext.spectral_report(k, d).eigenvalues
                    if not v.is_zero()}
            out.append(_eq("classical limit", f"A{k}{d} at q = 1", vals, {Fraction(math.factorial(k))}))
    star2 = {n: (p, str(c)) for n, (p, c) in ext.star_partners(2, "+").items()}
    out.append(_eq("star on 2-forms", "phi, kappa, psi", star2,
                   {"phi+": ("phi-", "1"), "kappa+": ("kappa-", "1"), "psi+": ("psi-", "1"),
                    "phi-": ("phi+", "1"), "kappa-": ("kappa+", "1"), "psi-": ("psi+", "1")}))
    star3 = ext.star_partners(3, "+")
    out.append(_eq("star on 3-forms", "chi- = -q^-2 chi+", star3["chi-"], ("chi+", -q ** -2)))
    return out


# -- hodge ---------------------------------------------------------------------------

def _m():
    return symbol("m")


def _real_contraction() -> Contraction:
    a = complex_symbol("alpha")
    return Contraction(a, Q ** 2 * a.conjugate(), symbol("nu"), symbol("epsilon"), symbol("xi"),
                       symbol("gamma"))


def _hermitian_linear_contraction() -> Contraction:
    a, e = symbol("alpha"), symbol("epsilon")
    return Contraction(a, Q ** 2 * a, symbol("nu"), e, e, symbol("gamma"))


def families() -> dict:
    return {"a+": hodge.family_a(sign=1), "a-": hodge.family_a(sign=-1),
            "b": hodge.family_b(), "c": hodge.family_c()}


def hodge_tables() -> list[Check]:
    """The symbolic regression gate against the published T+ tables."""
    m = _m()
    out = []
    g = Contraction.symbolic(True)
    cfg = HodgeConfig(g, m)
    out.append(_table("T+ on 1-forms", "symbolic complex contraction",
                      ref.compare("1-forms", hodge.hodge_matrix(cfg, 1), ref.hodge_1forms(g, m))))
    ext_tab = {"1": hodge.hodge_matrix(cfg, 0)["1"], "mu": {"1": hodge.t_of_mu(cfg)}}
    out.append(_table("T+ on 1 and mu", "symbolic complex contraction",
                      ref.compare("extremes", ext_tab, ref.hodge_extremes(g, m))))
    gr = _real_contraction()
    out.append(_table("T+ on 3-forms", "symbolic real contraction",
                      ref.compare("3-forms", hodge.hodge_matrix(HodgeConfig(gr, m), 3),
                                  ref.hodge_3forms(gr, m))))
    gh = _hermitian_linear_contraction()
    computed = hodge.hodge_matrix(HodgeConfig(gh, m), 2)
    full = ref.hodge_2forms(gh, m)
    for label, rows in (("phi+ kappa- block", ("phi+", "kappa-")),
                        ("phi- kappa+ block", ("phi-", "kappa+")), ("psi block", ("psi-", "psi+"))):
        out.append(_table("published T+ on 2-forms", label,
                          ref.compare(label, computed, {r: full[r] for r in rows}, gh)))
    return out


def hodge_conditions() -> list[Check]:
    m = _m()
    out = []
    g = Contraction.symbolic(True)
    res = hodge.reality_residuals(HodgeConfig(g, m))
    out.append(_ok("reality conditions", "generic contraction is not real", any(res.values())))
    out.append(_eq("reality conditions", "closed-form list", hodge.reality_conditions(g),
                   ["beta* = q^2 alpha", "nu real", "epsilon real", "xi real", "gamma real"]))
    gr = _real_contraction()
    res = hodge.reality_residuals(HodgeConfig(gr, m))
    out.append(_ok("reality conditions", "conditions imply reality", not any(res.values())))
    for name, single in (("beta", Contraction(gr.alpha, Q ** 2 * gr.alpha, gr.nu, gr.epsilon, gr.xi, gr.gamma)),
                         ("gamma", Contraction(gr.alpha, gr.beta, gr.nu, gr.epsilon, gr.xi,
                                               gr.gamma + symbol("gamma_im") * I))):
        res = hodge.reality_residuals(HodgeConfig(single, m))
        out.append(_ok("reality conditions", f"violating only the {name} condition", any(res.values())))
    # hermitianity: the residuals of T^2 + T^2(1) on 1-forms
    gh = _hermitian_linear_contraction()
    cond = hodge.hermitian_conditions(gh)
    c1, c2 = cond["cubic"], cond["quartic"]
    res = hodge.hermitian_residuals(HodgeConfig(gh, m))
    nu, eps, gam = gh.nu, gh.epsilon, gh.gamma
    out.append(_ok("hermitian conditions", "omega+- residuals vanish once beta = q^2 alpha, xi = epsilon",
                   not res["omega-"] and not res["omega+"]))
    out.append(_eq("hermitian conditions", "omega0 residual = m^2 (nu quartic - epsilon cubic)",
                   res["omega0"].get("omega0", ZERO), m ** 2 * (nu * c2 - eps * c1)))
    out.append(_eq("hermitian conditions", "omegaz residual = m^2 (epsilon quartic - gamma cubic)",
                   res["omegaz"].get("omega0", ZERO), m ** 2 * (eps * c2 - gam * c1)))
    gr = _real_contraction()
    res = hodge.hermitian_residuals(HodgeConfig(gr, m))
    out.append(_ok("hermitian conditions", "beta = q^2 alpha and xi = epsilon are needed",
                   bool(res["omega-"]) and bool(res["omega0"])))
    for name, g in families().items():
        pub = hodge.published_quartic(g)
        out.append(_ok("published quartic", f"vanishes on family {name}", g.is_zero(pub), str(g.canon(pub))))
        comp = hodge.hermitian_conditions(g)
        out.append(_ok("hermitian conditions", f"all four vanish on family {name}",
                       all(g.is_zero(v) for v in comp.values())))
    return out


def hodge_families() -> list[Check]:
    m = _m()
    out = []
    expected = {"a+": "a", "a-": "a", "b": "b", "c": "c"}
    for name, g in families().items():
        out.append(_eq("classification", f"family {name}", hodge.classify_family(g), expected[name]))
        for d in "+-":
            out.append(_eq("maximal hermitianity", f"T{d} family {name}",
                           hodge.is_maximally_hermitian(g, d, "T"), name.startswith("a")))
    for name in ("a+", "a-"):
        g = families()[name]
        out.append(_eq("classification", f"L-based, family {name}", hodge.classify_family(g, "L"), "a"))
        for d in "+-":
            out.append(_ok("maximal hermitianity", f"L{d} family {name}", hodge.is_maximally_hermitian(g, d, "L")))
        for d in "+-":
            cfg = HodgeConfig(g, m, d)
            out.append(_table(f"T{d} on 2-forms, family (a)", f"family {name}",
                              ref.compare("2-forms", hodge.hodge_matrix(cfg, 2), ref.hodge_2forms_family_a(g, m, d), g)))
        for k in (0, 1, 3, 4):
            mp = hodge.hodge_matrix(HodgeConfig(g, m, "+"), k)
            mm = hodge.hodge_matrix(HodgeConfig(g, m, "-"), k)
            out.append(_table("T- = T+", f"degree {k}, family {name}", ref.compare(f"deg{k}", mm, mp, g)))
    return out


def hodge_duality() -> list[Check]:
    out = []
    m = _m()
    for name in ("a+", "a-"):
        g = families()[name]
        mn = hodge.normalize_m(g)
        out.append(_eq("normalized m", f"family {name}: m^2 alpha beta epsilon^2", mn ** 2 * g.alpha * g.beta * g.epsilon ** 2, ONE))
        for c in hodge.verify_duality_identities(g, mn):
            c.subject = f"{c.subject} family {name}"
            out.append(c)
        for d in "+-":
            dq, sgn = hodge.detq_and_sign(HodgeConfig(g, mn, d))
            out.append(_eq("det_q", f"family {name} [{d}]", dq, ref.detq_family_a(g)))
            out.append(_eq("sgn", f"family {name} [{d}]", sgn, -1))
        cfg = HodgeConfig(g, m)
        mu = hodge.volume_form(m)
        vv = hodge.contract(g, mu.tensor, 4, mu.tensor, 4).get(0, ZERO)
        out.append(_eq("volume self-pairing", f"Gamma(mu, mu), family {name}", vv, ref.volume_self_pairing(g, m)))
        lmu = hodge.hodge_L(cfg, mu).scalar()
        tmu = hodge.t_of_mu(cfg)
        out.append(_ok("published L(mu) != T(mu)", f"family {name}", not g.is_zero(lmu - tmu),
                       f"L(mu) = T(mu) = {tmu}"))
    return out


def hodge_suite() -> list[Check]:
    return hodge_tables() + hodge_conditions() + hodge_families() + hodge_duality()


# -- metric --------------------------------------------------------------------------

def metric_suite() -> list[Check]:
    out = []
    verdicts = {}
    for sign in (1, -1):
        g = metric.metric_from_contraction(hodge.family_a(sign=sign))
        verdicts[sign] = metric.classify_metric(g)
        results = {r.name: r.status for r in metric.check_sigma_metric(g)}
        out.append(_eq("metric reality", f"branch sign {sign:+d}", results["reality"], "pass"))
        out.append(_eq("metric nondegenerate", f"branch sign {sign:+d}", results["nondegenerate"], "pass"))
    out.append(_eq("sigma-metric branch", "branch sign -1", verdicts[-1], metric.IN_G_SIGMA))
    out.append(_eq("sigma-metric branch", "branch sign +1", verdicts[1], metric.IN_G_ONLY))
    out.append(_ok("sigma-metric branch", "exactly one branch", list(verdicts.values()).count(metric.IN_G_SIGMA) == 1))
    ident = metric.MetricMatrix.from_rows([[ONE if i == j else ZERO for j in range(4)] for i in range(4)])
    out.append(_eq("metric membership", "identity matrix", metric.classify_metric(ident), metric.NOT_IN_G))
    return out


# -- oracle --------------------------------------------------------------------------

def _monomials(deg: int):
    return [(k, m, n) for k in range(-deg, deg + 1) for m in range(deg + 1) for n in range(deg + 1)
            if abs(k) + m + n <= deg]


def oracle_suite(two_jmax: int = 4) -> list[Check]:
    out = []
    q = Q
    W = qa.UqElement.word
    gens = qa.ideal_generators()
    bad = [(i, lab) for i, g in enumerate(gens) for lab in qa.TANGENT_LABELS
           if not qa.pairing(qa.tangent_op(lab), g).is_zero()]
    out.append(_ok("tangent ideal", "<L_a, Q_i> = 0 for nine generators", not bad, str(bad)))
    out.append(_ok("tangent ideal", "L_a(1) = 0", all(qa.pairing(qa.tangent_op(l), qa.ONE_ELEMENT).is_zero()
                                                    for l in qa.TANGENT_LABELS)))
    rels = {
        "K E = q E K": W("K", "E") - W("E", "K").scale(q),
        "K F = q^-1 F K": W("K", "F") - W("F", "K").scale(q ** -1),
        "K K^-1 = 1": W("K", "Ki") - qa.UNIT,
        "[E, F] = (K^2 - K^-2)/(q - q^-1)": W("E", "F") - W("F", "E")
        - (W("K", "K") - W("Ki", "Ki")).scale((q - q ** -1) ** -1),
        "two forms of L_0": qa.tangent_op("0", 1) - qa.tangent_op("0", 2),
        "C_q = L_0 + [1/2]^2 - 1/4": qa.casimir() - qa.tangent_op("0")
        - qa.UNIT.scale(qnum(1) ** 2 - Fraction(1, 4)),
    }
    monos = _monomials(4)
    for name, r in rels.items():
        for side in ("left", "right"):
            bad = [mo for mo in monos if not qa.act(r, qa.AlgebraElement({mo: ONE}), side).is_zero()]
            out.append(_ok("enveloping relations", f"{name} ({side} action, degree <= 4)", not bad, str(bad[:3])))
    small = _monomials(3)
    ok = all(qa.act(h, qa.act(g, qa.AlgebraElement({mo: ONE}), "right")) ==
             qa.act(g, qa.act(h, qa.AlgebraElement({mo: ONE})), "right")
             for mo in small for h in ("K", "E", "F") for g in ("K", "E", "F"))
    out.append(_ok("actions commute", "(h |> x) <| g = h |> (x <| g)", ok))
    ok = all(qa.act(h, qa.AlgebraElement({mo: ONE}).star(), side) ==
             qa.act(h.antipode().star(), qa.AlgebraElement({mo: ONE}), side).star()
             for mo in small for h in (W("K"), W("E"), W("F")) for side in ("left", "right"))
    out.append(_ok("star compatibility", "h |> x* = (S(h)* |> x)*", ok))
    ok = all(qa.pairing(W("E"), x * y) == qa.pairing(W("E"), x) * qa.pairing(W("K"), y)
             + qa.pairing(W("Ki"), x) * qa.pairing(W("E"), y)
             for x in (qa.A, qa.C, qa.A_STAR, qa.C_STAR) for y in (qa.A, qa.C, qa.A_STAR, qa.C_STAR))
    out.append(_ok("pairing coproduct", "<E, xy> = <E,x><K,y> + <K^-1,x><E,y>", ok))
    for n, tj in qa.valid_nJ(2, two_jmax):
        cas = lap.casimir_value(tj)
        out.append(_ok("casimir", f"(n, J) = ({n}, {lap.format_j(tj)})", qa.casimir_check(n, tj)))
        phis = [qa.build_phi(n, tj, l) for l in range(tj + 1)]
        out.append(_ok("phi basis", f"charge and weights, (n, J) = ({n}, {lap.format_j(tj)})",
                       all(qa.charge(p) == n and not p.is_zero()
                           and qa.eigen_ratio(qa.act("K", p), p) == qa.SQ ** n
                           and qa.eigen_ratio(qa.act(qa.tangent_op("0"), p), p) == cas
                           and qa.eigen_ratio(qa.act(qa.tangent_op("z"), p), p) == lap.lambda_z(n)
                           for p in phis)))
    for r in qa.differential_reconstruction():
        out.append(_ok("differential reconstruction", f"omega{r.label}", r.ok, str(r.coefficients)))
    return out


# -- laplacian -----------------------------------------------------------------------

def laplacian_suite(two_jmax: int = 4) -> list[Check]:
    out = []
    alpha = symbol("alpha")
    out.append(_eq("laplacian branch", "sigma branch is the lower sign pair", lap.branch_sign("sigma"), -1))
    for n, tj in qa.valid_nJ(2, two_jmax):
        subj = f"(n, J) = ({n}, {lap.format_j(tj)})"
        ev_sigma = lap.oracle_eigenvalue("L", "sigma", alpha, n, tj)
        out.append(_eq("laplacian sigma spectrum", subj, ev_sigma, 2 * Q * alpha * lap.casimir_value(tj)))
        ev_other = lap.oracle_eigenvalue("L", "other", alpha, n, tj)
        out.append(_eq("laplacian other spectrum", subj, ev_other, lap.box_eigenvalue("L", "other", alpha, n, tj)))
        for ra in lap.R_ACTIONS:
            out.append(_eq("Box^R = Box^L", f"{subj}, R acting {ra}",
                           lap.oracle_eigenvalue("R", "sigma", alpha, n, tj, ra), ev_sigma))
        out.append(_eq("Box^R other spectrum", subj, lap.oracle_eigenvalue("R", "other", alpha, n, tj),
                       lap.box_eigenvalue("R", "other", alpha, n, tj)))
        dq = lap.deltaq_eigenvalue(n, tj)
        j = Fraction(tj, 2)
        out.append(_eq("Delta_q classical limit", subj, eval_at(dq, 1).as_fraction(), j * (j + 1)))
        out.append(_eq("sigma classical limit", subj,
                       eval_at(lap.box_eigenvalue("L", "sigma", 1, n, tj), 1).as_fraction(), 2 * j * (j + 1)))
    scan = lap.scan_spectrum("other", 1, Fraction(1, 2), 8, 8)
    out.append(_ok("other-branch scan", "both signs at q = 1/2, |n| <= 8, J <= 4",
                   scan.has_negative and scan.has_positive, f"min {scan.minimum}, max {scan.maximum}"))
    scan = lap.scan_spectrum("sigma", 1, Fraction(1, 2), 8, 8)
    vals = {}
    for e in scan.entries:
        vals.setdefault(e.n, []).append(e.value)
    out.append(_ok("sigma-branch scan", "nonnegative and increasing in J",
                   not scan.has_negative and all(v == sorted(v) and len(set(v)) == len(v) for v in vals.values())))
    return out


SUITE_FUNCS = {
    "braiding": braiding_suite,
    "exterior": exterior_suite,
    "hodge": hodge_suite,
    "metric": metric_suite,
    "oracle": oracle_suite,
    "laplacian": laplacian_suite,
}


def run_suites(names, fault: bool = False) -> dict:
    out = {}
    for name in names:
        out[name] = braiding_suite(fault) if name == "braiding" else SUITE_FUNCS[name]()
    return out
