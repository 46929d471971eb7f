"""Beta invariants, stability-threshold intervals, wall enumeration with
confirmation, and the named instability certificates.

For a boundary curve with coefficient c the beta of a valuation is

    beta(c) = A0 - m*c - S0*(1 - 2c)

with A0 the log discrepancy at c = 0, m the valuation's multiplicity on the
curve and S0 the c-stripped S-coefficient.  Every constraint is affine in c,
so each valuation contributes one exact rational half-line; a threshold is an
intersection of finitely many of them.

Completeness of the finite sweep: on every chart family the engine
S-coefficient is affine in the weights (a, b) and the multiplicity is a
concave piecewise-affine minimum, so for fixed c the normalized constraint
beta(c; 1, r)/1 is piecewise affine in r = b/a.  Its infimum over r > 0 is
attained at a kink (a monomial crossing or the a = b split) or at the ends
r -> 0, infinity, and the end limits are dominated by the toric divisor
constraints.  The kink weights plus the four toric divisors therefore decide
semistability exactly; an independent piecewise check over whole r-intervals
(:func:`verify_semistable_at`) re-derives the same answer without the dominance
argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from . import polycheck
from .exactnum import SurdSum, render_fraction, render_surd
from .pairs import (
    CurvePair,
    OnePS,
    _LOCAL_MAPS,
    chart_expand,
    lambda_weight,
    make_curve,
    multiplicity,
    onePS_to_chart,
    toric_multiplicities,
)
from .volume import (
    BLP114_CHART_TAGS,
    ChartCase,
    F1_CHART_TAGS,
    fixed_divisor_s,
    s_engine_coefficient,
)

Number = Union[int, Fraction, SurdSum]

TORIC_DIVISORS = ("H_x", "H_y", "H_z", "E")


# ---------------------------------------------------------------------------
# beta reports


@dataclass(frozen=True)
class BetaReport:
    valuation: str
    a_value: Fraction
    s_value: SurdSum
    beta: SurdSum
    verdict: str  # destabilizing | critical | positive
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "valuation": self.valuation,
            "A": render_fraction(self.a_value),
            "S": render_surd(self.s_value),
            "beta": render_surd(self.beta),
            "verdict": self.verdict,
        }
        if self.note:
            out["note"] = self.note
        return out


def _verdict(beta: SurdSum) -> str:
    s = beta.sign()
    return "destabilizing" if s < 0 else ("critical" if s == 0 else "positive")


def _report(name: str, a0: Fraction, m: Fraction, s0: Number, c: Fraction,
            note: str = "") -> BetaReport:
    c = Fraction(c)
    a_val = a0 - m * c
    s_val = SurdSum._coerce(s0) * (1 - 2 * c)
    beta = SurdSum.rational(a_val) - s_val
    return BetaReport(name, a_val, s_val, beta, _verdict(beta), note)


def beta_toric(curve: CurvePair, divisor: str, c) -> BetaReport:
    """Beta of one of the four invariant divisors on the surface itself."""
    mults = toric_multiplicities(curve)
    s0 = fixed_divisor_s(curve.surface)[divisor]
    return _report(divisor, Fraction(1), Fraction(mults[divisor]), s0, c)


def beta_chart(curve: CurvePair, chart: ChartCase, c) -> BetaReport:
    """Beta of the chart's weighted-blowup valuation, S by volume integration."""
    support = chart_expand(curve, chart)
    m = multiplicity(support, chart.a, chart.b)
    s0 = s_engine_coefficient(chart)
    name = f"{chart.tag}({chart.a},{chart.b})"
    return _report(name, Fraction(chart.a + chart.b), Fraction(m), s0, c)


def beta(curve: CurvePair, valuation: Union[str, ChartCase, OnePS], c) -> BetaReport:
    """Beta report for a toric divisor name, a chart, or a 1-PS weight."""
    if isinstance(valuation, str):
        return beta_toric(curve, valuation, c)
    if isinstance(valuation, ChartCase):
        return beta_chart(curve, valuation, c)
    chart = onePS_to_chart(tuple(valuation), curve.surface)
    return beta_chart(curve, chart, c)


# ---------------------------------------------------------------------------
# affine constraints in c


@dataclass(frozen=True)
class Constraint:
    """beta(c) = u + v*c >= 0 for one valuation."""

    name: str
    u: Fraction
    v: Fraction

    def beta_at(self, c: Fraction) -> Fraction:
        return self.u + self.v * Fraction(c)


def _constraint(name: str, a0: Fraction, m: Fraction, s0: Fraction) -> Constraint:
    if isinstance(s0, SurdSum):
        s0 = s0.as_fraction()
    return Constraint(name, a0 - s0, 2 * s0 - m)


def toric_constraints(curve: CurvePair) -> list[Constraint]:
    mults = toric_multiplicities(curve)
    table = fixed_divisor_s(curve.surface)
    return [_constraint(d, Fraction(1), Fraction(mults[d]), table[d])
            for d in TORIC_DIVISORS]


def chart_families(surface: str) -> tuple[str, ...]:
    return F1_CHART_TAGS if surface == "f1" else BLP114_CHART_TAGS


def _local_points(curve: CurvePair, tag: str) -> list[tuple[int, int]]:
    mapper = _LOCAL_MAPS[tag]
    pts = []
    for m in curve.monomials:
        pt = mapper(curve.surface, m.i, m.j)
        if pt not in pts:
            pts.append(pt)
    return pts


def _branch_ratios(tag: str) -> list[Fraction]:
    if tag in ("case1-010", "case1-001"):
        return [Fraction(1)]
    return []


def kink_weights(curve: CurvePair, tag: str) -> list[tuple[int, int]]:
    """Primitive (a, b) where the local multiplicity or the S-branch kinks."""
    pts = _local_points(curve, tag)
    ratios: set[Fraction] = set(_branch_ratios(tag))
    for k in range(len(pts)):
        for l in range(k + 1, len(pts)):
            # a*e1 + b*f1 = a*e2 + b*f2 at the ratio r = b/a = (e1-e2)/(f2-f1)
            de = pts[k][0] - pts[l][0]
            df = pts[l][1] - pts[k][1]
            if de != 0 and df != 0 and (de > 0) == (df > 0):
                ratios.add(Fraction(abs(de), abs(df)))
    out = []
    for r in sorted(ratios):
        out.append((r.denominator, r.numerator))
    return out


def chart_constraints(curve: CurvePair, tag: str,
                      extra_weights: Iterable[tuple[int, int]] = ()) -> list[Constraint]:
    weights = list(kink_weights(curve, tag))
    for w in extra_weights:
        if w not in weights:
            weights.append(w)
    if not weights:
        weights = [(1, 1)]
    out = []
    for a, b in weights:
        chart = ChartCase(curve.surface, tag, a, b)
        support = chart_expand(curve, chart)
        m = multiplicity(support, a, b)
        s0 = s_engine_coefficient(chart)
        out.append(_constraint(f"{tag}({a},{b})", Fraction(a + b), Fraction(m), s0))
    return out


def all_constraints(curve: CurvePair) -> list[Constraint]:
    cons = toric_constraints(curve)
    for tag in chart_families(curve.surface):
        cons.extend(chart_constraints(curve, tag))
    return cons


# ---------------------------------------------------------------------------
# stability thresholds


@dataclass(frozen=True)
class StabilityThreshold:
    lower: Optional[Fraction]  # None means unconstrained below
    upper: Optional[Fraction]  # None means unconstrained above
    classification: str  # empty | point | interval
    binding_lower: tuple[str, ...] = ()
    binding_upper: tuple[str, ...] = ()
    guarantee: str = ""

    def is_point(self, w: Optional[Fraction] = None) -> bool:
        if self.classification != "point":
            return False
        return w is None or self.lower == Fraction(w)

    def to_json(self) -> dict:
        return {
            "lower": render_fraction(self.lower) if self.lower is not None else "-inf",
            "upper": render_fraction(self.upper) if self.upper is not None else "+inf",
            "classification": self.classification,
            "binding_lower": list(self.binding_lower),
            "binding_upper": list(self.binding_upper),
            "guarantee": self.guarantee,
        }


def _intersect(cons: Sequence[Constraint]) -> StabilityThreshold:
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    bind_lo: list[str] = []
    bind_hi: list[str] = []
    infeasible = False
    for con in cons:
        if con.v == 0:
            if con.u < 0:
                infeasible = True
            continue
        bound = -con.u / con.v
        if con.v > 0:
            if lower is None or bound > lower:
                lower, bind_lo = bound, [con.name]
            elif bound == lower:
                bind_lo.append(con.name)
        else:
            if upper is None or bound < upper:
                upper, bind_hi = bound, [con.name]
            elif bound == upper:
                bind_hi.append(con.name)
    lo_eff = lower if lower is not None else Fraction(0)
    hi_eff = upper if upper is not None else Fraction(1, 2)
    if infeasible or lo_eff > hi_eff or lo_eff >= Fraction(1, 2) or hi_eff <= 0:
        cls = "empty"
    elif lower is not None and upper is not None and lower == upper:
        cls = "point"
    else:
        cls = "interval"
    return StabilityThreshold(lower, upper, cls, tuple(bind_lo), tuple(bind_hi))


def threshold(curve: CurvePair, bound: int = 30,
              cross_check_grid: bool = False) -> StabilityThreshold:
    """{c : beta(c) >= 0 for every swept valuation}, exact.

    The kink sweep is complete for these chart families (see module
    docstring); the optional grid sweep over all coprime a + b <= bound is a
    redundant cross-check and must never tighten the result.
    """
    if bound < 12:
        raise ValueError("grid bound must be at least 12")
    cons = all_constraints(curve)
    base = _intersect(cons)
    guarantee = "kink-complete"
    if cross_check_grid:
        grid = _intersect(cons + _grid_constraints(curve, bound))
        if (grid.lower, grid.upper, grid.classification) != (
                base.lower, base.upper, base.classification):
            raise ArithmeticError(
                f"grid sweep tightened the kink threshold: {grid} vs {base}")
        guarantee += f"+grid({bound})"
    return StabilityThreshold(base.lower, base.upper, base.classification,
                              base.binding_lower, base.binding_upper, guarantee)


def _grid_constraints(curve: CurvePair, bound: int) -> list[Constraint]:
    out = []
    for tag in chart_families(curve.surface):
        for a in range(1, bound):
            for b in range(1, bound + 1 - a):
                if gcd(a, b) != 1:
                    continue
                chart = ChartCase(curve.surface, tag, a, b)
                support = chart_expand(curve, chart)
                m = multiplicity(support, a, b)
                out.append(_constraint(f"{tag}({a},{b})", Fraction(a + b),
                                       Fraction(m), s_engine_coefficient(chart)))
    return out


# ---------------------------------------------------------------------------
# independent interval verifier


def _s_affine(tag: str) -> tuple[Fraction, Fraction]:
    """(alpha, beta) with S0(1, r) = alpha + beta*r; affine on each family."""
    if tag in ("case1-010", "case1-001"):
        return Fraction(20, 24), Fraction(26, 24)
    if tag in ("case2-zu", "case2-yv"):
        return Fraction(28, 24), Fraction(26, 24)
    if tag == "case1p":
        return Fraction(83, 48), Fraction(106, 48)
    if tag == "case2p":
        return Fraction(83, 48), Fraction(25, 48)
    if tag == "case3p":
        return Fraction(82, 48), Fraction(25, 48)
    raise ValueError(tag)


def verify_semistable_at(curve: CurvePair, c) -> tuple[bool, list[str]]:
    """Exact check that beta(c) >= 0 over all swept valuations.

    Covers the four toric divisors and, for every chart family, the full
    continuum of weight ratios r = b/a in (0, infinity) piece by piece.
    Returns (ok, failures) with witness descriptions on failure.
    """
    c = Fraction(c)
    failures: list[str] = []
    for con in toric_constraints(curve):
        if con.beta_at(c) < 0:
            failures.append(f"toric {con.name}: beta({c}) = {con.beta_at(c)}")
    for tag in chart_families(curve.surface):
        pts = _local_points(curve, tag)
        cut_ratios = sorted({Fraction(b, a) for a, b in kink_weights(curve, tag)})
        grid = [Fraction(0)] + cut_ratios
        for idx, lo in enumerate(grid):
            hi = grid[idx + 1] if idx + 1 < len(grid) else None
            probe = (lo + hi) / 2 if hi is not None else lo + 1
            if probe == 0:
                probe = Fraction(1, 2) if hi is None else hi / 2
            e_star, f_star = min(pts, key=lambda p: p[0] + probe * p[1])
            s_a, s_b = _s_affine(tag)
            one_minus = 1 - 2 * c
            # beta(c; 1, r) = (1 + r) - c(e* + f* r) - (1-2c)(s_a + s_b r)
            p = polycheck.poly([
                1 - c * e_star - one_minus * s_a,
                1 - c * f_star - one_minus * s_b,
            ])
            if hi is not None:
                ok, witness = polycheck.nonneg_on_interval(p, lo, hi)
            else:
                ok, witness = polycheck.nonneg_on_ray(p, lo)
            if not ok:
                failures.append(
                    f"{tag}: beta({c}) < 0 near ratio r = {witness}")
    return (not failures), failures


# ---------------------------------------------------------------------------
# closed-form wall formulas


def wall_formula(branch: str, a: int, b: int, m: int) -> Optional[Fraction]:
    """Closed-form wall value for the plane-model chart branches.

    ``case2`` and ``case1-high`` are the tabulated closed forms.  The
    ``case1-low`` form is derived from the exact S-function, which is branch
    free, so it is the correct Case-1 expression for every weight pair; the
    tabulated Case-1 expressions agree with it only on a = b (see the
    confirmed-wall reproduction tests).  Returns None when the value is
    undefined or falls outside (0, 1/2).
    """
    a, b, m = Fraction(a), Fraction(b), Fraction(m)
    if a <= 0 or b <= 0 or m < 0:
        return None
    if branch == "case2":
        den = 28 * a + 26 * b - 12 * m
        num = 2 * a + b
    elif branch == "case1-high":
        den = 12 * m - 26 * a - 20 * b
        num = 2 * b - a
    elif branch == "case1-low":
        den = 12 * m - 20 * a - 26 * b
        num = 2 * a - b
    else:
        raise ValueError(f"unknown branch {branch!r}")
    if den == 0:
        return None
    w = num / den
    return w if 0 < w < Fraction(1, 2) else None


def wall_from_chart(chart: ChartCase, m: int, source: str = "engine") -> Optional[Fraction]:
    """Exact solution of beta(w) = 0 for the chart valuation, if in (0, 1/2).

    ``source`` selects the S-coefficient: ``engine`` integrates the volume
    profile, ``published`` evaluates the tabulated closed forms (whose surd
    branches then admit no rational root).
    """
    if source == "engine":
        s0 = s_engine_coefficient(chart)
    elif source == "published":
        from .volume import s_closed_form_coefficient
        s0 = s_closed_form_coefficient(chart)
    else:
        raise ValueError(f"unknown source {source!r}")
    if isinstance(s0, SurdSum):
        if not s0.is_rational():
            return None
        s0 = s0.as_fraction()
    den = 2 * s0 - m
    if den == 0:
        return None
    w = (s0 - (chart.a + chart.b)) / den
    return w if 0 < w < Fraction(1, 2) else None


# ---------------------------------------------------------------------------
# wall candidates, confirmation and enumeration


@dataclass(frozen=True)
class WallCandidate:
    w: Fraction
    surface: str
    curve: CurvePair
    weight: Optional[OnePS]
    chart: Optional[ChartCase]
    m: Optional[int]
    via: str = ""

    def to_json(self) -> dict:
        out = {
            "w": render_fraction(self.w),
            "surface": self.surface,
            "curve": self.curve.to_json()["text"],
            "weight": list(self.weight) if self.weight else None,
            "via": self.via,
        }
        if self.chart is not None:
            out.update({"chart": self.chart.tag, "a": self.chart.a,
                        "b": self.chart.b, "m": self.m})
        return out


@dataclass(frozen=True)
class WallRecord:
    candidate: WallCandidate
    confirmed: bool
    reason: str
    binding_lower: tuple[str, ...] = ()
    binding_upper: tuple[str, ...] = ()

    def to_json(self) -> dict:
        out = self.candidate.to_json()
        out["confirmed"] = self.confirmed
        if not self.confirmed:
            out["reason"] = self.reason
        out["binding_valuations"] = sorted(set(self.binding_lower + self.binding_upper))
        return out


def _weight_for_chart(chart: ChartCase) -> OnePS:
    a, b = chart.a, chart.b
    return {
        "case2-yv": (0, a, a + b),
        "case2-zu": (0, a + b, a),
        "case1-010": (a, 0, b),
        "case1-001": (a, b, 0),
        "case3p": (a, 0, b),
        "case2p": (-a, 0, b - 3 * a),
        "case1p": (-(a + b), 0, -(3 * a + 4 * b)),
    }[chart.tag]


def confirm_wall(candidate: WallCandidate) -> WallRecord:
    """Equivariant polystability screen for a candidate wall.

    Checks, all exactly: the realizing horizontal valuation vanishes at w;
    the four invariant divisors have beta >= 0 at w; the full threshold
    degenerates to {w}; and the continuum verifier confirms semistability at
    w itself.
    """
    w = candidate.w
    curve = candidate.curve
    if candidate.weight is not None and lambda_weight(curve, candidate.weight) is None:
        return WallRecord(candidate, False, "non-invariant curve")
    if candidate.chart is not None:
        rep = beta_chart(curve, candidate.chart, w)
        if rep.verdict != "critical":
            return WallRecord(candidate, False,
                              f"horizontal beta is {render_surd(rep.beta)}, not 0")
    for d in TORIC_DIVISORS:
        rep = beta_toric(curve, d, w)
        if rep.verdict == "destabilizing":
            return WallRecord(candidate, False, f"beta({d}) < 0 at w")
    thr = threshold(curve)
    if not thr.is_point(w):
        return WallRecord(candidate, False,
                          f"threshold is {thr.classification} "
                          f"[{thr.to_json()['lower']}, {thr.to_json()['upper']}], not {{{w}}}")
    ok, failures = verify_semistable_at(curve, w)
    if not ok:
        return WallRecord(candidate, False, "; ".join(failures))
    return WallRecord(candidate, True, "", thr.binding_lower, thr.binding_upper)


def admissible_monomials(surface: str) -> list[tuple[int, int]]:
    out = []
    if surface == "f1":
        for i in range(7):
            for j in range(7 - i):
                if i + j >= 2:
                    out.append((i, j))
    else:
        for j in range(4):
            for i in range(13 - 4 * j):
                if i + j >= 2:
                    out.append((i, j))
    return out


def _support_curve(surface: str, support: Iterable[tuple[int, int]]) -> CurvePair:
    pts = sorted(set(support))
    tags = {}
    if len(pts) > 2:
        for p in pts[1:-1]:
            tags[p] = "generic-nonzero"
    return make_curve(surface, pts, tags)


def _candidate_supports(surface: str):
    """Invariant supports: maximal equal-weight sets per chart direction,
    degenerate-direction level sets, and single monomials."""
    monos = admissible_monomials(surface)
    seen: set[tuple[Fraction, ...]] = set()

    def z3_ok(support: list[tuple[int, int]]) -> bool:
        return surface == "f1" or (0, 3) in support

    # chart-direction pairs
    for tag in chart_families(surface):
        mapper = _LOCAL_MAPS[tag]
        local = {p: mapper(surface, *p) for p in monos}
        for k in range(len(monos)):
            for l in range(k + 1, len(monos)):
                e1, f1_ = local[monos[k]]
                e2, f2_ = local[monos[l]]
                de, df = e1 - e2, f2_ - f1_
                if de == 0 or df == 0 or (de > 0) != (df > 0):
                    continue
                g = gcd(abs(de), abs(df))
                a, b = abs(df) // g, abs(de) // g
                m = a * e1 + b * f1_
                support = [p for p in monos if a * local[p][0] + b * local[p][1] == m]
                if not z3_ok(support):
                    continue
                key = (tag, a, b, tuple(sorted(support)))
                if key in seen:
                    continue
                seen.add(key)
                yield ("chart", tag, a, b, m, support)

    # degenerate 1-PS directions: level sets of the toric gradings
    gradings = {
        "E": lambda p: p[0] + p[1],
        "H_y": lambda p: p[0],
        "H_z": lambda p: p[1],
        "H_x": (lambda p: 6 - p[0] - p[1]) if surface == "f1"
               else (lambda p: 12 - p[0] - 4 * p[1]),
    }
    emitted: set[tuple[tuple[int, int], ...]] = set()
    for grading in gradings.values():
        levels: dict[int, list[tuple[int, int]]] = {}
        for p in monos:
            levels.setdefault(grading(p), []).append(p)
        for support in levels.values():
            key = tuple(sorted(support))
            if key in emitted or not z3_ok(list(support)):
                continue
            emitted.add(key)
            yield ("degenerate", None, None, None, None, support)
    # single monomials
    for p in monos:
        key = (p,)
        if key in emitted or not z3_ok([p]):
            continue
        emitted.add(key)
        yield ("single", None, None, None, None, [p])


def enumerate_walls(surface: str, confirm: bool = True,
                    source: str = "published") -> list[WallRecord]:
    """All confirmed walls with their realizing data, sorted by wall value.

    ``source='published'`` draws chart candidates from the tabulated
    closed-form S-expressions (the published search space); ``'engine'``
    draws them from the exact volume integrals instead.  Confirmation always
    uses the exact engine machinery.
    """
    records: dict[tuple[Fraction, tuple[tuple[int, int], ...]], WallCandidate] = {}
    for kind, tag, a, b, m, support in _candidate_supports(surface):
        curve = _support_curve(surface, support)
        key_support = tuple(sorted(curve.support()))
        if kind == "chart":
            chart = ChartCase(surface, tag, a, b)
            w = wall_from_chart(chart, m, source=source)
            if w is None:
                continue
            key = (w, key_support)
            if key not in records:
                records[key] = WallCandidate(
                    w, surface, curve, _weight_for_chart(chart), chart, m, "chart")
        else:
            thr = threshold(curve)
            if thr.classification != "point":
                continue
            w = thr.lower
            assert w is not None
            key = (w, key_support)
            if key not in records:
                records[key] = WallCandidate(w, surface, curve, None, None, None, kind)
    out: list[WallRecord] = []
    for key in sorted(records, key=lambda k: (k[0], k[1])):
        cand = records[key]
        rec = confirm_wall(cand) if confirm else WallRecord(cand, True, "unconfirmed")
        out.append(rec)
    return out


def wall_values(surface: str, source: str = "published") -> list[Fraction]:
    """Sorted distinct confirmed wall values."""
    vals = sorted({r.candidate.w
                   for r in enumerate_walls(surface, source=source) if r.confirmed})
    return vals


def audit_extra_walls(surface: str) -> list[WallRecord]:
    """Point-threshold candidates found by the exact engine beyond the
    published enumeration.

    Every implemented check is a necessary condition for a wall; candidates
    listed here pass them all but are absent from the published wall tables
    (they live on weight branches where the tabulated S-expressions disagree
    with the exact integrals).  They are reported for audit, not asserted.
    """
    published = {r.candidate.w for r in enumerate_walls(surface, source="published")
                 if r.confirmed}
    extras = [r for r in enumerate_walls(surface, source="engine")
              if r.confirmed and r.candidate.w not in published]
    return extras


# ---------------------------------------------------------------------------
# named certificates


def index3_certificate(c) -> BetaReport:
    """The index-3 degree-8 pair is destabilized by its quotient valuation."""
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise ValueError("coefficient must lie in (0, 1/2)")
    a_val = Fraction(1, 3) - Fraction(2, 3) * c
    s_val = SurdSum.rational(Fraction(8, 9) * (1 - 2 * c))
    beta_val = SurdSum.rational(a_val) - s_val
    assert beta_val == SurdSum.rational(Fraction(10, 9) * c - Fraction(5, 9))
    return BetaReport("index3:qF", a_val, s_val, beta_val, _verdict(beta_val),
                      note="A = 1/3 - 2c/3, S = 8/9 (1-2c)")


def quotient_point_certificate(curve_or_ord: Union[CurvePair, int], c) -> BetaReport:
    """Destabilization of a pair whose branch curve meets the quarter point.

    A <= 1/2 - c * ord_F(C) with ord_F(C) = 3 - max z-exponent >= 1; the
    certificate S-value is the tabulated 2*sqrt(2)/3 * (1-2c).  The engine's
    own profile on the resolution model integrates to 47/48 * (1-2c), which
    is larger, so the tabulated value destabilizes a fortiori; both are
    reported.
    """
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise ValueError("coefficient must lie in (0, 1/2)")
    if isinstance(curve_or_ord, CurvePair):
        curve = curve_or_ord
        if curve.surface != "blp114":
            raise ValueError("the quarter-point certificate lives on blp114")
        ord_f = 3 - max(m.j for m in curve.monomials)
    else:
        ord_f = int(curve_or_ord)
    if ord_f < 1:
        raise ValueError("curve misses the quarter point (z^3 present)")
    a_val = Fraction(1, 2) - c * ord_f
    s_val = SurdSum.sqrt(2) * Fraction(2, 3) * (1 - 2 * c)
    beta_val = SurdSum.rational(a_val) - s_val
    from .volume import volume_profile
    from .surface import builtin_surface
    engine_raw = volume_profile(builtin_surface("blp114-quotient-res")).raw_integral
    engine_s = engine_raw * (1 - 2 * c) / 8
    note = (f"ord_F(C) = {ord_f}; engine S = {render_surd(engine_s)} "
            f"(profile tau = 3/2) also destabilizes")
    if (SurdSum.rational(a_val) - engine_s).sign() >= 0:
        raise AssertionError("engine cross-check failed to destabilize")
    return BetaReport("quarter-point:F", a_val, s_val, beta_val,
                      _verdict(beta_val), note=note)


def first_wall_bound() -> tuple[Fraction, tuple[int, int]]:
    """min of 1/(20 - 3i - 6j) over i >= 0, j >= 1 with positive denominator."""
    best: Optional[Fraction] = None
    arg = (0, 1)
    for i in range(0, 7):
        for j in range(1, 4):
            den = 20 - 3 * i - 6 * j
            if den <= 0:
                continue
            val = Fraction(1, den)
            if best is None or val < best:
                best, arg = val, (i, j)
    assert best is not None
    return best, arg
