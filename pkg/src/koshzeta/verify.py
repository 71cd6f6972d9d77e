"""Identity verification registry and machine-readable reporting.

Every analytic identity the package implements is re-derived here as a
numerical residual between two independently computed sides.  Checks are
grouped by family, run sequentially, and collected into a report that can
be serialized to JSON (schema ``koshliakov-report/1``) or CSV.  A failed
or erroring check never aborts the run.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional

import mpmath
from mpmath import mp, mpf, mpc

from .ctx import NumericContext, make_context
from .errors import KoshzetaError
from . import __version__
from .spectrum import root_table, clear_spectrum_cache
from .bracket import (
    bracket_integral, bracket_kummer, bracket_mellin_sub, bracket_lattice,
    exp_p_series, exp_p_mellin, nu_of, clear_bracket_cache,
)
from .zeta import (
    amplitude, zeta_deformed, eta_deformed, zeta_deformed_series,
    eta_deformed_series, bernoulli_even_mpf, zeta_classical,
)
from .bernoulli import (
    b2_via_zeta, b2_via_integral, b2_gf_fit,
    b1_via_series, b1_via_integral, b1_via_zeta,
    clear_bernoulli_cache,
)
from .omega import (
    omega_sum, weighted_sum, weighted_sum_direct,
    lambert_classical, lambert_alternating, clear_omega_cache,
)
from .rampoly import (
    bernoulli_list, ram_poly, two_term_residual, three_term_residual,
    eps1_coeff, eps2_coeff,
)
from .eisenstein import (
    eisenstein_deformed, eisenstein_classical, check_modular, check_quasi,
)


SCHEMA = "koshliakov-report/1"


# ---------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    """Grid sizes and tolerances for one verification sweep."""
    name: str
    digits: int
    # deformation parameters used by most sweeps
    ps: tuple
    root_ps: tuple
    root_count: int
    m_transform: tuple
    ab_pairs: tuple          # (alpha, beta) expression strings, alpha*beta=pi^2
    weights: tuple
    modular_zs: tuple        # complex z as (re, im) pairs, im > 0
    poly_ks: tuple
    poly_ps: tuple
    poly_zcount: int
    limit_decades: tuple     # exponents d; probes at p = 10^d and 10^-d
    sum_tol: str             # abs tolerance for contour-based sums
    rtol_transform: str      # relative tolerance for composed identities
    rtol_single: str         # relative tolerance for single-family identities
    tight_tol: str           # abs tolerance for closed forms / polynomials
    root_tol: str
    limit_tol: str = "3.16227766e-4"   # 10^(-3.5)


def _pairs_std():
    return (("pi", "pi"), ("2", "pi**2/2"))


PROFILES = {
    "smoke": Profile(
        name="smoke", digits=15,
        ps=(1.0,), root_ps=(1.0,), root_count=50,
        m_transform=(1, -2), ab_pairs=(("2", "pi**2/2"),),
        weights=(4,), modular_zs=((0.0, 2.0),),
        poly_ks=(2, 3), poly_ps=(1.0,), poly_zcount=6,
        limit_decades=(4,),
        sum_tol="1e-10", rtol_transform="1e-7", rtol_single="1e-7",
        tight_tol="1e-9", root_tol="1e-10", limit_tol="2e-3",
    ),
    "standard": Profile(
        name="standard", digits=30,
        ps=(0.5, 1.0, 2.0), root_ps=(0.1, 1.0, 10.0), root_count=200,
        m_transform=(-3, -2, 1, 2), ab_pairs=_pairs_std(),
        weights=(4, 6, 8),
        modular_zs=((0.0, 2.0), (0.0, 1.2), (0.4, 1.1), (-0.3, 0.9)),
        poly_ks=(2, 3, 4, 5, 6, 7, 8), poly_ps=(0.3, 1.0, 5.0),
        poly_zcount=50,
        limit_decades=(2, 4, 6),
        sum_tol="1e-16", rtol_transform="1e-12", rtol_single="1e-15",
        tight_tol="1e-20", root_tol="1e-25",
    ),
    "deep": Profile(
        name="deep", digits=50,
        ps=(0.5, 1.0, 2.0), root_ps=(0.1, 1.0, 10.0), root_count=200,
        m_transform=(-3, -2, 1, 2), ab_pairs=_pairs_std(),
        weights=(4, 6, 8),
        modular_zs=((0.0, 2.0), (0.0, 1.2), (0.4, 1.1), (-0.3, 0.9)),
        poly_ks=(2, 3, 4, 5, 6, 7, 8), poly_ps=(0.3, 1.0, 5.0),
        poly_zcount=50,
        limit_decades=(2, 4, 6),
        sum_tol="1e-24", rtol_transform="1e-18", rtol_single="1e-22",
        tight_tol="1e-32", root_tol="1e-42",
    ),
}


# ---------------------------------------------------------------------
# check records
# ---------------------------------------------------------------------

@dataclass
class IdentityCheck:
    id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tol: float
    status: str              # "pass" | "fail" | "error"
    ms: float = 0.0
    note: str = ""

    def to_json_obj(self):
        return {
            "id": self.id,
            "params": self.params,
            "lhs": [float(self.lhs.real), float(self.lhs.imag)],
            "rhs": [float(self.rhs.real), float(self.rhs.imag)],
            "abs_residual": float(self.abs_residual),
            "rel_residual": float(self.rel_residual),
            "tol": float(self.tol),
            "status": self.status,
            "ms": float(self.ms),
            "note": self.note,
        }


@dataclass
class VerificationReport:
    context: dict
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def summary(self):
        n = len(self.checks)
        passed = sum(1 for c in self.checks if c.status == "pass")
        failed = sum(1 for c in self.checks if c.status == "fail")
        errors = sum(1 for c in self.checks if c.status == "error")
        return {
            "total": n, "passed": passed, "failed": failed,
            "errors": errors,
            "wall_ms": float(sum(c.ms for c in self.checks)),
        }

    @property
    def ok(self):
        s = self.summary
        return s["failed"] == 0 and s["errors"] == 0

    def to_json(self, indent=2):
        obj = {
            "schema": SCHEMA,
            "context": self.context,
            "checks": [c.to_json_obj() for c in self.checks],
            "summary": self.summary,
        }
        return json.dumps(obj, indent=indent, sort_keys=True)

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "status", "abs_residual", "rel_residual",
                    "tol", "ms", "params"])
        for c in self.checks:
            w.writerow([c.id, c.status, repr(c.abs_residual),
                        repr(c.rel_residual), repr(c.tol), repr(c.ms),
                        json.dumps(c.params, sort_keys=True)])
        return buf.getvalue()


def clear_caches():
    """Drop every module-level numeric cache (used for determinism runs)."""
    clear_spectrum_cache()
    clear_bracket_cache()
    clear_bernoulli_cache()
    clear_omega_cache()


# ---------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------

def _to_c(x):
    v = mpc(x)
    return complex(float(v.real), float(v.imag))


def _mk(check_id, params, lhs, rhs, tol, ctx, note=""):
    with ctx.workprec():
        l, r = mpc(lhs), mpc(rhs)
        a = abs(l - r)
        floor = mpf(10) ** (-ctx.digits)
        rel = a / max(abs(l), abs(r), floor)
        tol = mpf(tol)
        status = "pass" if min(a, rel) <= tol else "fail"
        return IdentityCheck(
            id=check_id, params=params, lhs=_to_c(l), rhs=_to_c(r),
            abs_residual=float(a), rel_residual=float(rel),
            tol=float(tol), status=status, note=note)


def _mk_abs(check_id, params, lhs, rhs, tol, ctx, note=""):
    """Like _mk but judged on the absolute residual only."""
    c = _mk(check_id, params, lhs, rhs, tol, ctx, note)
    c.status = "pass" if c.abs_residual <= c.tol else "fail"
    return c


def _alpha_beta(pair):
    # tiny expression language: "pi", "pi**2/2", plain numbers
    def ev(txt):
        txt = txt.strip()
        if txt == "pi":
            return mp.pi
        if txt == "pi**2":
            return mp.pi ** 2
        if txt == "pi**2/2":
            return mp.pi ** 2 / 2
        return mpf(txt)
    return ev(pair[0]), ev(pair[1])


# ---------------------------------------------------------------------
# check families
# ---------------------------------------------------------------------

def checks_roots(prof: Profile, ctx: NumericContext):
    out = []
    for p in prof.root_ps:
        pp = mpf(repr(p))
        tab = root_table(pp, ctx, count=prof.root_count)
        with ctx.workprec():
            worst = mpf(0)
            ordered = True
            prev = mpf(0)
            for j in range(1, prof.root_count + 1):
                lam = tab.roots[j - 1]
                res = abs(pp * mp.sin(mp.pi * lam) + lam * mp.cos(mp.pi * lam))
                worst = max(worst, res)
                ordered = ordered and (j - mpf(1) / 2 < lam < j) and lam > prev
                prev = lam
        out.append(_mk_abs(
            "roots/defining-equation", {"p": p, "count": prof.root_count},
            worst, 0, prof.root_tol, ctx))
        out.append(_mk_abs(
            "roots/interlacing", {"p": p, "count": prof.root_count},
            1 if ordered else 0, 1, "0.5", ctx,
            note="each root sits in (j-1/2, j), strictly increasing"))
    # extreme deformation: roots approach integers (large p) and
    # half-integers (small p)
    for p, target in ((1e6, "j"), (1e-6, "j-1/2")):
        pp = mpf(repr(p))
        tab = root_table(pp, ctx, count=10)
        with ctx.workprec():
            gap = mpf(0)
            for j in range(1, 11):
                ref = mpf(j) if target == "j" else mpf(j) - mpf(1) / 2
                gap = max(gap, abs(tab.roots[j - 1] - ref))
        out.append(_mk_abs(
            "roots/extreme-deformation", {"p": p, "near": target},
            gap, 0, "1e-5", ctx))
    return out


def checks_bracket(prof: Profile, ctx: NumericContext):
    out = []
    tol = mpf(10) ** (-(prof.digits - 8))
    svals = [mpf("2.5"), mpf("0.75"), mpc(2, 3)]
    for p in prof.ps:
        pp = mpf(repr(p))
        for s in svals:
            for k in (1, 2, 7):
                params = {"p": p, "s": str(mp.nstr(mpc(s), 8)), "k": k}
                vi = bracket_integral(s, k, pp, ctx)
                vk = bracket_kummer(s, k, pp, ctx)
                vm = bracket_mellin_sub(s, k, pp, ctx)
                out.append(_mk("bracket/integral-vs-kummer", params,
                               vi, vk, tol, ctx))
                out.append(_mk("bracket/kummer-vs-mellin", params,
                               vk, vm, tol, ctx))
        # entire continuation: value at s = -1 is elementary
        for k in (1, 2, 7):
            vk = bracket_kummer(mpf(-1), k, pp, ctx)
            with ctx.workprec():
                ref = 1 + 1 / (mp.pi * pp)
            out.append(_mk("bracket/value-at-minus-one",
                           {"p": p, "k": k}, vk, ref, tol, ctx))
        # fast-path lattice against the direct routes
        lat = bracket_lattice(pp, ctx)
        with ctx.workprec():
            s0 = mpf("1.5")
            br = lat.brackets(s0, [1, 3, 11], mpf(tol) * mpf("0.1"))
            for k in (1, 3, 11):
                vk = bracket_kummer(s0, k, pp, ctx)
                out.append(_mk("bracket/lattice-vs-kummer",
                               {"p": p, "s": 1.5, "k": k},
                               br[k], vk, tol, ctx))
    # exponential kernel: power-series route against the contour route
    p0 = mpf(repr(prof.ps[0]))
    es = exp_p_series(mpf(2), mpf(3), 4, p0, ctx)
    em = exp_p_mellin(mpf(2), mpf(3), 4, p0, ctx)
    out.append(_mk("expkernel/series-vs-contour",
                   {"p": prof.ps[0], "x": 2, "z": 3, "k": 4},
                   es, em, tol, ctx))
    return out


def checks_euler_type(prof: Profile, ctx: NumericContext):
    """Even-argument values of both zeta flavors against the two
    generalized-Bernoulli integral representations."""
    out = []
    rtol = mpf(prof.rtol_single)
    for p in prof.ps:
        pp = mpf(repr(p))
        for m in (1, 2, 3):
            with ctx.workprec():
                pref = (-1) ** (m + 1) * (2 * mp.pi) ** (2 * m) / \
                    (2 * mpmath.factorial(2 * m))
                lhs_eta = eta_deformed_series(2 * m, pp, ctx)
                rhs_eta = pref * b2_via_integral(m, pp, ctx)
                lhs_z = zeta_deformed_series(2 * m, pp, ctx)
                rhs_z = pref * b1_via_integral(m, pp, ctx)
            out.append(_mk("euler-type/eta-even", {"p": p, "m": m},
                           lhs_eta, rhs_eta, rtol, ctx))
            out.append(_mk("euler-type/zeta-even", {"p": p, "m": m},
                           lhs_z, rhs_z, rtol, ctx))
    return out


def _transform_sides(m, alpha, beta, pp, ctx, sum_tol):
    """Both sides of the modular-type transformation for the weighted sums."""
    with ctx.workprec():
        A = amplitude(pp)
        eta_odd = eta_deformed(2 * m + 1, pp, ctx)
        Sa = weighted_sum(alpha, m, pp, ctx, abs_tol=sum_tol)
        Sb = weighted_sum(beta, m, pp, ctx, abs_tol=sum_tol)
        lhs = alpha ** (-m) * (A / 2 * eta_odd + Sa)
        rhs = (-beta) ** mpf(-m) * (A / 2 * eta_odd + Sb)
        if m + 1 >= 0:
            corr = mpf(0)
            b2 = [b2_via_zeta(2 * j, pp, ctx) for j in range(m + 2)]
            for j in range(m + 2):
                corr += (-1) ** j * b2[j] * b2[m + 1 - j] / \
                    (mpmath.factorial(2 * j) *
                     mpmath.factorial(2 * m - 2 * j + 2)) * \
                    alpha ** (m + 1 - j) * beta ** j
            rhs -= mpf(2) ** (2 * m) * corr
        return lhs, rhs


def checks_transform(prof: Profile, ctx: NumericContext):
    out = []
    sum_tol = mpf(prof.sum_tol)
    for p in prof.ps:
        pp = mpf(repr(p))
        for m in prof.m_transform:
            for pair in prof.ab_pairs:
                alpha, beta = _alpha_beta(pair)
                try:
                    lhs, rhs = _transform_sides(m, alpha, beta, pp, ctx,
                                                sum_tol)
                except KoshzetaError as exc:
                    out.append(IdentityCheck(
                        id="transform/modular-type",
                        params={"p": p, "m": m, "alpha": pair[0],
                                "beta": pair[1]},
                        lhs=0j, rhs=0j, abs_residual=float("nan"),
                        rel_residual=float("nan"),
                        tol=float(mpf(prof.rtol_transform)),
                        status="error", note=str(exc)))
                    continue
                out.append(_mk(
                    "transform/modular-type",
                    {"p": p, "m": m, "alpha": pair[0], "beta": pair[1]},
                    lhs, rhs, prof.rtol_transform, ctx))
    return out


def checks_transform_special(prof: Profile, ctx: NumericContext):
    """Companion statements for the weighted sums: the symmetric
    negative-order transformation, even-order vanishing, the odd-order
    closed form, the coefficient-sum identity, and the logarithmic case."""
    out = []
    rtol = mpf(prof.rtol_transform)
    sum_tol = mpf(prof.sum_tol)
    alpha, beta = _alpha_beta(("2", "pi**2/2"))
    for p in prof.ps:
        pp = mpf(repr(p))
        with ctx.workprec():
            A = amplitude(pp)
            # symmetric transformation at negative order
            for m in (1, 2):
                eta_neg = eta_deformed(-2 * m - 1, pp, ctx)
                Sa = weighted_sum(alpha, -m - 1, pp, ctx, abs_tol=sum_tol)
                Sb = weighted_sum(beta, -m - 1, pp, ctx, abs_tol=sum_tol)
                lhs = alpha ** (m + 1) * (Sa + A / 2 * eta_neg)
                rhs = (-beta) ** mpf(m + 1) * (Sb + A / 2 * eta_neg)
                out.append(_mk("transform/symmetric-negative",
                               {"p": p, "m": m}, lhs, rhs, rtol, ctx))
            # even order: the self-reciprocal point kills the sum
            m = 2
            lhs = weighted_sum(mp.pi, -m - 1, pp, ctx, abs_tol=sum_tol)
            rhs = -A / 2 * eta_deformed(-2 * m - 1, pp, ctx)
            out.append(_mk_abs("transform/even-order-vanishing",
                               {"p": p, "m": m}, lhs, rhs,
                               sum_tol * 100, ctx))
            # closed form at order -1
            lhs = weighted_sum(mp.pi, -1, pp, ctx, abs_tol=sum_tol)
            rhs = -A / 2 * eta_deformed(-1, pp, ctx) - 1 / (8 * mp.pi)
            out.append(_mk("transform/order-minus-one-closed-form",
                           {"p": p}, lhs, rhs, rtol, ctx))
            # coefficient-sum identity at the self-reciprocal point
            m = 0
            b2 = [b2_via_zeta(2 * j, pp, ctx) for j in range(2 * m + 3)]
            corr = mpf(0)
            for j in range(2 * m + 3):
                corr += (-1) ** (j + 1) * b2[j] * b2[2 * m + 2 - j] / \
                    (mpmath.factorial(2 * j) *
                     mpmath.factorial(4 * m - 2 * j + 4))
            lhs = 2 * weighted_sum(mp.pi, 2 * m + 1, pp, ctx,
                                   abs_tol=sum_tol)
            rhs = -A * eta_deformed(4 * m + 3, pp, ctx) + \
                (2 * mp.pi) ** (4 * m + 3) / 2 * corr
            out.append(_mk("transform/coefficient-sum",
                           {"p": p, "m": m}, lhs, rhs, rtol, ctx))
    return out


def checks_log_case(prof: Profile, ctx: NumericContext):
    out = []
    rtol = mpf(prof.rtol_transform)
    sum_tol = mpf(prof.sum_tol)
    pairs = (("2", "pi**2/2"), ("1", "pi**2")) if prof.name != "smoke" \
        else (("2", "pi**2/2"),)
    for p in prof.ps:
        pp = mpf(repr(p))
        with ctx.workprec():
            b2_2 = b2_via_zeta(2, pp, ctx)
            for pair in pairs:
                alpha, beta = _alpha_beta(pair)
                lhs = weighted_sum(alpha, 0, pp, ctx, abs_tol=sum_tol) - \
                    weighted_sum(beta, 0, pp, ctx, abs_tol=sum_tol)
                rhs = b2_2 / 2 * (beta - alpha) + \
                    mp.log(alpha / beta) / (4 * (1 + 1 / (mp.pi * pp)) ** 2)
                out.append(_mk("logcase/deformed",
                               {"p": p, "alpha": pair[0], "beta": pair[1]},
                               lhs, rhs, rtol, ctx))
    # degeneration of the log case toward the classical Lambert series
    d = prof.limit_decades[-1]
    pp = mpf(10) ** d
    with ctx.workprec():
        alpha, beta = _alpha_beta(("2", "pi**2/2"))
        lhs = weighted_sum(alpha, 0, pp, ctx, abs_tol=mpf("1e-6")) - \
            weighted_sum(beta, 0, pp, ctx, abs_tol=mpf("1e-6"))
        rhs = lambert_classical(alpha, 0, ctx) - \
            lambert_classical(beta, 0, ctx)
    out.append(_mk_abs("logcase/classical-limit", {"p": float(10 ** d)},
                       lhs, rhs, prof.limit_tol, ctx))
    return out


def checks_limits(prof: Profile, ctx: NumericContext):
    """Degeneration of the weighted sums and both zeta flavors to their
    classical counterparts as the deformation parameter leaves (0, inf)."""
    out = []
    ltol = mpf(prof.limit_tol)
    coarse = mpf("1e-6")
    gaps_up, gaps_dn = [], []
    for d in prof.limit_decades:
        with ctx.workprec():
            pp = mpf(10) ** d
            S = weighted_sum(mp.pi, 1, pp, ctx, abs_tol=coarse)
            gap = abs(S - lambert_classical(mp.pi, 1, ctx))
            gaps_up.append(gap)
            pp = mpf(10) ** (-d)
            S = weighted_sum(mp.pi, 1, pp, ctx, abs_tol=coarse)
            gap = abs(S - lambert_alternating(mp.pi, 1, ctx))
            gaps_dn.append(gap)
    out.append(_mk_abs("limits/sum-large-p",
                       {"p": float(10 ** prof.limit_decades[-1]), "m": 1},
                       gaps_up[-1], 0, ltol, ctx))
    out.append(_mk_abs("limits/sum-small-p",
                       {"p": float(10 ** -prof.limit_decades[-1]), "m": 1},
                       gaps_dn[-1], 0, ltol, ctx))
    for tag, gaps in (("large", gaps_up), ("small", gaps_dn)):
        mono = all(gaps[i + 1] < gaps[i] for i in range(len(gaps) - 1))
        out.append(_mk_abs(
            f"limits/sum-{tag}-p-monotone",
            {"decades": list(prof.limit_decades)},
            1 if mono else 0, 1, "0.5", ctx,
            note="gap to the classical sum shrinks with each decade"))
    # continuation values approach the classical zeta pattern
    d = prof.limit_decades[-1]
    with ctx.workprec():
        pp = mpf(10) ** d
        probes = [
            ("limits/eta-at-minus-one", eta_deformed(-1, pp, ctx),
             -mpf(1) / 12),
            ("limits/zeta-at-zero", zeta_deformed(0, pp, ctx), -mpf(1) / 2),
            ("limits/zeta-at-minus-three", zeta_deformed(-3, pp, ctx),
             mpf(1) / 120),
            ("limits/zeta-noninteger", zeta_deformed(mpf("-2.5"), pp, ctx),
             zeta_classical(mpf("-2.5"), ctx)),
            ("limits/eta-series", eta_deformed(mpf(3), pp, ctx),
             zeta_classical(mpf(3), ctx)),
        ]
        pps = mpf(10) ** (-d)
        probes.append(
            ("limits/eta-small-p", eta_deformed_series(
                mpf(3), pps, ctx, abs_tol=mpf("1e-8")),
             (2 ** mpf(-2) - 1) * zeta_classical(mpf(3), ctx)))
    for cid, got, want in probes:
        out.append(_mk_abs(cid, {"p": float(10 ** d)}, got, want, ltol, ctx))
    return out


def checks_classical_closed_forms(prof: Profile, ctx: NumericContext):
    """Classical corollaries: exact closed forms for Lambert-type sums."""
    out = []
    tol = mpf(prof.tight_tol)
    with ctx.workprec():
        rows = [
            ("closedform/weight-one",
             lambert_classical(mp.pi, -1, ctx),
             mpf(1) / 24 - 1 / (8 * mp.pi)),
            ("closedform/glaisher-m1",
             lambert_classical(mp.pi, -3, ctx),
             bernoulli_even_mpf(3) / 12),
            ("closedform/glaisher-m2",
             lambert_classical(mp.pi, -5, ctx),
             bernoulli_even_mpf(5) / 20),
            ("closedform/zeta3",
             lambert_classical(mp.pi, 1, ctx),
             7 * mp.pi ** 3 / 360 - zeta_classical(mpf(3), ctx) / 2),
            ("closedform/alternating-weight-one",
             lambert_alternating(mp.pi, -1, ctx),
             -1 / (8 * mp.pi)),
        ]
    for cid, got, want in rows:
        out.append(_mk(cid, {}, got, want, tol, ctx))
    return out


def checks_bernoulli(prof: Profile, ctx: NumericContext):
    """Route triangle for both generalized Bernoulli families."""
    out = []
    rtol = mpf(prof.rtol_single)
    for p in prof.ps:
        pp = mpf(repr(p))
        for m in (1, 2):
            vz = b2_via_zeta(2 * m, pp, ctx)
            vi = b2_via_integral(m, pp, ctx)
            out.append(_mk("bernoulli2/zeta-vs-integral", {"p": p, "m": m},
                           vz, vi, rtol, ctx))
            vs = b1_via_series(2 * m, pp, ctx).values[2 * m]
            vj = b1_via_integral(m, pp, ctx)
            vzz = b1_via_zeta(m, pp, ctx)
            out.append(_mk("bernoulli1/series-vs-integral", {"p": p, "m": m},
                           vs, vj, rtol, ctx))
            out.append(_mk("bernoulli1/series-vs-zeta", {"p": p, "m": m},
                           vs, vzz, rtol, ctx))
        # the first-order coefficient ties the generating function to the
        # zeta value at the origin; the fit route is fully independent
        fit = b2_gf_fit(pp, 4, ctx).values
        out.append(_mk("bernoulli2/fit-vs-zeta-b1", {"p": p},
                       fit[1], b2_via_zeta(1, pp, ctx), "1e-7", ctx))
        out.append(_mk("bernoulli2/fit-vs-zeta-b2", {"p": p},
                       fit[2], b2_via_zeta(2, pp, ctx), "1e-7", ctx))
        # the integral route for the first family needs the alternating
        # sign (-1)^{m+1}; the opposite sign is measurably wrong
        m = 1
        with ctx.workprec():
            good = b1_via_integral(m, pp, ctx)
            bad = b1_via_integral(m, pp, ctx, sign=(-1) ** (m + 2))
            ref = b1_via_series(2 * m, pp, ctx).values[2 * m]
            sep = abs(bad - ref) > 1000 * abs(good - ref) + mpf("1e-6")
        out.append(_mk_abs("bernoulli1/integral-sign-probe", {"p": p, "m": m},
                           1 if sep else 0, 1, "0.5", ctx,
                           note="(-1)^(m+1) matches; the opposite sign does not"))
    return out


def checks_rampoly(prof: Profile, ctx: NumericContext):
    out = []
    tol = mpf(prof.tight_tol)
    rng = random.Random(20260826)
    zs = []
    for _ in range(prof.poly_zcount):
        r = 0.5 + 1.5 * rng.random()
        th = 2 * 3.141592653589793 * rng.random()
        zs.append((r, th))
    for p in prof.poly_ps:
        pp = mpf(repr(p))
        for kind in (1, 2):
            bern = bernoulli_list(kind, pp, 2 * max(prof.poly_ks), ctx)
            for k in prof.poly_ks:
                with ctx.workprec():
                    worst = mpf(0)
                    for (r, th) in zs:
                        z = mpf(repr(r)) * mp.e ** (mpc(0, 1) * mpf(repr(th)))
                        scale = max(mpf(1), abs(ram_poly(
                            k, kind, pp, z, ctx, bern=bern)))
                        worst = max(worst, abs(two_term_residual(
                            k, kind, pp, z, ctx, bern=bern)) / scale)
                out.append(_mk_abs(
                    "rampoly/two-term", {"p": p, "kind": kind, "k": k},
                    worst, 0, tol, ctx,
                    note="residual scaled by the largest coefficient"))
    # three-term relation, first kind: fully independent pipelines
    for p in prof.poly_ps[:2]:
        pp = mpf(repr(p))
        for k in prof.poly_ks[:2]:
            with ctx.workprec():
                z = mpc("1.7", "0.4")
                res = abs(three_term_residual(k, 1, pp, z, ctx))
            out.append(_mk_abs("rampoly/three-term-kind1",
                               {"p": p, "k": k}, res, 0, tol, ctx))
    # three-term, second kind: closed correction, with a generating-
    # function fit corroborating the correction coefficient
    for p in prof.poly_ps[:2]:
        pp = mpf(repr(p))
        for k in prof.poly_ks[:2]:
            with ctx.workprec():
                z = mpf("1.6")
                res = abs(three_term_residual(k, 2, pp, z, ctx))
            out.append(_mk_abs("rampoly/three-term-kind2",
                               {"p": p, "k": k}, res, 0, tol, ctx))
    for k in (2, 3):
        # the generating-function fit needs headroom beyond the profile
        # precision to keep the Vandermonde solve well conditioned
        fit_ctx = ctx if ctx.digits >= 30 else make_context(30)
        with fit_ctx.workprec():
            pp = mpf(1)
            x = mpf("1.6")
            closed = eps2_coeff(k, pp, x, fit_ctx)
            fitted = eps2_coeff(k, pp, x, fit_ctx, route="fit")
        out.append(_mk("rampoly/eps2-closed-vs-fit", {"p": 1.0, "k": k},
                       closed, fitted, "1e-5", ctx))
    # classical degeneration: both corrections vanish as p -> inf
    with ctx.workprec():
        pp = mpf(10) ** 6
        e1 = abs(eps1_coeff(3, pp, mpf("1.6"), ctx))
        e2 = abs(eps2_coeff(3, pp, mpf("1.6"), ctx))
    out.append(_mk_abs("rampoly/eps1-classical-limit", {"p": 1e6, "k": 3},
                       e1, 0, "1e-3", ctx))
    out.append(_mk_abs("rampoly/eps2-classical-limit", {"p": 1e6, "k": 3},
                       e2, 0, "1e-3", ctx))
    return out


def checks_eisenstein(prof: Profile, ctx: NumericContext):
    out = []
    rtol_mod = mpf(prof.rtol_single)
    rtol_quasi = mpf(prof.rtol_transform)
    sum_tol = mpf(prof.sum_tol) * mpf("0.01")
    for p in prof.ps:
        pp = mpf(repr(p))
        for w in prof.weights:
            for (zr, zi) in prof.modular_zs:
                params = {"p": p, "weight": w, "z": [zr, zi]}
                try:
                    with ctx.workprec():
                        z = mpc(repr(zr), repr(zi))
                        left, right = check_modular(w, pp, z, ctx,
                                                    abs_tol=sum_tol)
                except KoshzetaError as exc:
                    out.append(IdentityCheck(
                        id="eisenstein/modular", params=params,
                        lhs=0j, rhs=0j, abs_residual=float("nan"),
                        rel_residual=float("nan"), tol=float(rtol_mod),
                        status="error", note=str(exc)))
                    continue
                out.append(_mk("eisenstein/modular", params,
                               left, right, rtol_mod, ctx))
        # quasi-modular weight-2 relation
        try:
            with ctx.workprec():
                z = mpc(0, "1.3")
                left, right = check_quasi(pp, z, ctx, abs_tol=sum_tol)
        except KoshzetaError as exc:
            out.append(IdentityCheck(
                id="eisenstein/quasi-modular", params={"p": p, "z": [0.0, 1.3]},
                lhs=0j, rhs=0j, abs_residual=float("nan"),
                rel_residual=float("nan"), tol=float(rtol_quasi),
                status="error", note=str(exc)))
            continue
        out.append(_mk("eisenstein/quasi-modular",
                       {"p": p, "z": [0.0, 1.3]},
                       left, right, rtol_quasi, ctx))
    # classical degeneration
    with ctx.workprec():
        pp = mpf(10) ** 6
        z = mpc(0, 2)
        got = eisenstein_deformed(4, pp, z, ctx, abs_tol=mpf("1e-8"))
        want = eisenstein_classical(4, z, ctx)
    out.append(_mk_abs("eisenstein/classical-limit",
                       {"p": 1e6, "weight": 4, "z": [0.0, 2.0]},
                       got, want, "1e-3", ctx))
    return out


def checks_dual_route(prof: Profile, ctx: NumericContext):
    """The weighted sum and its building blocks computed two ways."""
    out = []
    pp = mpf(1)
    # exponential-sum kernel: term-by-term series vs contour
    o1 = omega_sum(mpf(2), 1, pp, ctx, route="series", abs_tol=mpf("1e-12"))
    o2 = omega_sum(mpf(2), 1, pp, ctx, route="mellin", abs_tol=mpf("1e-12"))
    out.append(_mk_abs("dualroute/omega", {"p": 1.0, "x": 2, "m": 1},
                       o1, o2, "1e-10", ctx))
    # full weighted sum: contour representation vs direct double sum
    S1 = weighted_sum(mp.pi, 1, pp, ctx, abs_tol=mpf(prof.sum_tol))
    S2 = weighted_sum_direct(mp.pi, 1, pp, ctx, abs_tol=mpf("1e-10"))
    out.append(_mk_abs("dualroute/weighted-sum", {"p": 1.0, "m": 1},
                       S1, S2, "1e-8", ctx))
    return out


CHECK_FAMILIES: List[tuple] = [
    ("roots", checks_roots),
    ("bracket", checks_bracket),
    ("euler-type", checks_euler_type),
    ("bernoulli", checks_bernoulli),
    ("closedform", checks_classical_closed_forms),
    ("rampoly", checks_rampoly),
    ("transform", checks_transform),
    ("transform-special", checks_transform_special),
    ("logcase", checks_log_case),
    ("limits", checks_limits),
    ("eisenstein", checks_eisenstein),
    ("dualroute", checks_dual_route),
]


# ---------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------

def run_all(profile="standard", only=None,
            progress: Optional[Callable[[str], None]] = None):
    """Run every registered check family sequentially and collect a report.

    ``only`` is an iterable of substrings; a family runs if its name
    contains any of them.  Individual check failures and errors are
    recorded, never raised.
    """
    prof = PROFILES[profile] if isinstance(profile, str) else profile
    ctx = make_context(prof.digits)
    report = VerificationReport(context={
        "schema_profile": prof.name,
        "digits": prof.digits,
        "package_version": __version__,
        "mpmath_version": mpmath.__version__,
    })
    for name, fn in CHECK_FAMILIES:
        if only and not any(tok in name for tok in only):
            continue
        if progress:
            progress(f"family {name} ...")
        t0 = time.perf_counter()
        try:
            checks = fn(prof, ctx)
        except Exception as exc:   # a family must never abort the run
            checks = [IdentityCheck(
                id=f"{name}/family-error", params={},
                lhs=0j, rhs=0j, abs_residual=float("nan"),
                rel_residual=float("nan"), tol=0.0,
                status="error", note=f"{type(exc).__name__}: {exc}")]
        dt = (time.perf_counter() - t0) * 1000.0
        share = dt / max(1, len(checks))
        for c in checks:
            c.ms = share
        report.checks.extend(checks)
        if progress:
            bad = sum(1 for c in checks if c.status != "pass")
            progress(f"family {name}: {len(checks)} checks, "
                     f"{bad} not passing, {dt/1000:.1f}s")
    return report
