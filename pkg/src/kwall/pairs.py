"""Boundary curves as monomial data, 1-PS weights, chart-local expansions,
multiplicities and log discrepancies.

Curves live on one of the two plane models (``f1``: sextics through the
center with multiplicity 2; ``blp114``: weighted-degree-12 curves likewise).
Monomials are stored as (y-exponent, z-exponent) pairs; the x-exponent is
determined by the degree.  Only the monomial support enters any invariant;
coefficients are carried as display tags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .volume import ChartCase

TAG_ONE = "one"
TAG_GENERIC_NONZERO = "generic-nonzero"
TAG_GENERIC = "generic"


class CurveSyntaxError(ValueError):
    pass


class DegenerateWeightError(ValueError):
    """1-PS weights inducing a degenerate (a=0 or b=0) blowup."""

    def __init__(self, message: str):
        super().__init__(message + "; use the toric divisor valuations instead")


@dataclass(frozen=True)
class Monomial:
    i: int  # y-exponent
    j: int  # z-exponent
    tag: str = TAG_ONE
    label: str = ""

    def x_exp(self, surface: str) -> int:
        return _x_exponent(surface, self.i, self.j)


def _x_exponent(surface: str, i: int, j: int) -> int:
    if surface == "f1":
        return 6 - i - j
    if surface == "blp114":
        return 12 - i - 4 * j
    raise ValueError(f"unknown surface {surface!r}")


@dataclass(frozen=True)
class CurvePair:
    """A boundary curve in |-2K| presented by its plane monomial support."""

    surface: str
    monomials: tuple[Monomial, ...]
    warnings: tuple[str, ...] = ()

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple((m.i, m.j) for m in self.monomials)

    def to_json(self) -> dict:
        return {
            "surface": self.surface,
            "monomials": [
                {"i": m.i, "j": m.j, "coeff_tag": m.tag} for m in self.monomials
            ],
            "text": render_curve(self),
            "warnings": list(self.warnings),
        }


def make_curve(surface: str, support: Iterable[tuple[int, int]],
               tags: Optional[dict[tuple[int, int], str]] = None,
               labels: Optional[dict[tuple[int, int], str]] = None) -> CurvePair:
    tags = tags or {}
    labels = labels or {}
    monos = [Monomial(i, j, tags.get((i, j), TAG_ONE), labels.get((i, j), ""))
             for i, j in support]
    return _validated(surface, monos)


def _validated(surface: str, monos: list[Monomial]) -> CurvePair:
    if not monos:
        raise CurveSyntaxError("empty curve")
    seen = set()
    for m in monos:
        if (m.i, m.j) in seen:
            raise CurveSyntaxError(f"repeated monomial y^{m.i} z^{m.j}")
        seen.add((m.i, m.j))
        if m.i < 0 or m.j < 0:
            raise CurveSyntaxError("negative exponent")
        ex = _x_exponent(surface, m.i, m.j)
        if ex < 0:
            deg = "6" if surface == "f1" else "12 (weighted)"
            raise CurveSyntaxError(
                f"monomial y^{m.i} z^{m.j} exceeds total degree {deg}")
        if m.i + m.j < 2:
            raise CurveSyntaxError(
                f"monomial x^{ex} y^{m.i} z^{m.j} has multiplicity < 2 at the center")
    warnings: tuple[str, ...] = ()
    if surface == "blp114" and (0, 3) not in seen:
        warnings = ("z^3 absent: the pair is destabilized at the quarter point "
                    "for every coefficient (see certify quotient-point)",)
    monos.sort(key=lambda m: _render_sort_key(surface, m))
    return CurvePair(surface, tuple(monos), warnings)


def _render_sort_key(surface: str, m: Monomial):
    if surface == "f1":
        return (-m.x_exp(surface), -m.j, -m.i)
    return (-m.j, -m.i)


_MONO_RE = re.compile(r"^(?:(?P<coeff>a\d*|\d+(?:/\d+)?)\*)?(?P<body>[xyz^\d*]+)$")
_VAR_RE = re.compile(r"([xyz])(?:\^(\d+))?")


def parse_curve(text: str, surface: str) -> CurvePair:
    """Parse a '+'-separated sum of monomials like ``x^4*z^2+a*x^2*y^4``."""
    chunks = [c.strip() for c in text.replace(" ", "").split("+")]
    monos: list[Monomial] = []
    for chunk in chunks:
        if not chunk:
            raise CurveSyntaxError("empty monomial")
        m = _MONO_RE.match(chunk)
        if not m:
            raise CurveSyntaxError(f"cannot parse monomial {chunk!r}")
        coeff = m.group("coeff")
        body = m.group("body")
        consumed = "".join(f"{v}^{e}" if e else v for v, e in _VAR_RE.findall(body))
        if body.replace("*", "") != consumed:
            raise CurveSyntaxError(f"cannot parse monomial {chunk!r}")
        exps = {"x": 0, "y": 0, "z": 0}
        for var, e in _VAR_RE.findall(body):
            exps[var] += int(e) if e else 1
        tag = TAG_ONE
        label = ""
        if coeff is not None and coeff.startswith("a"):
            tag = TAG_GENERIC_NONZERO
            label = coeff
        i, j = exps["y"], exps["z"]
        if _x_exponent(surface, i, j) != exps["x"]:
            deg = "6" if surface == "f1" else "12 with wt(z)=4"
            raise CurveSyntaxError(
                f"monomial {chunk!r} does not have total degree {deg}")
        monos.append(Monomial(i, j, tag, label))
    return _validated(surface, monos)


def render_curve(curve: CurvePair) -> str:
    """Canonical text form; ``parse_curve(render_curve(c)) == c`` up to labels."""
    parts = []
    for m in curve.monomials:
        ex = m.x_exp(curve.surface)
        factors = []
        order = ("x", "z", "y") if curve.surface == "f1" else ("z", "y", "x")
        exps = {"x": ex, "y": m.i, "z": m.j}
        for var in order:
            e = exps[var]
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        body = "*".join(factors) if factors else "1"
        if m.tag == TAG_ONE:
            parts.append(body)
        else:
            parts.append((m.label or "a") + "*" + body)
    return "+".join(parts)


# ---------------------------------------------------------------------------
# 1-PS weights -> charts

OnePS = tuple[int, int, int]


def _chart(surface: str, tag: str, a: int, b: int) -> ChartCase:
    from math import gcd
    if a <= 0 or b <= 0:
        raise DegenerateWeightError(f"induced weights ({a},{b}) are degenerate")
    g = gcd(a, b)
    return ChartCase(surface, tag, a // g, b // g)


def onePS_to_chart(lam: OnePS, surface: str) -> ChartCase:
    """Chart case and primitive blowup weights induced by a nontrivial 1-PS."""
    l1, l2, l3 = lam
    if surface == "f1":
        if l1 == l2 == l3:
            raise DegenerateWeightError("trivial 1-PS")
        m = min(lam)
        mins = [k for k, v in enumerate(lam) if v == m]
        if len(mins) > 1:
            raise DegenerateWeightError(f"repeated minimal weight in {lam}")
        if mins[0] == 0:
            if l2 == l3:
                raise DegenerateWeightError(f"weights {lam} fix the exceptional direction")
            if l2 > l3:
                return _chart("f1", "case2-zu", l3 - l1, l2 - l3)
            return _chart("f1", "case2-yv", l2 - l1, l3 - l2)
        if mins[0] == 1:
            return _chart("f1", "case1-010", l1 - l2, l3 - l2)
        return _chart("f1", "case1-001", l1 - l3, l2 - l3)
    if surface == "blp114":
        # weights are defined up to adding (k, k, 4k); normalize l2 = 0
        p = l1 - l2
        q = l3 - 4 * l2
        if p == 0 and q == 0:
            raise DegenerateWeightError("trivial 1-PS")
        if p > 0 and q > 0:
            return _chart("blp114", "case3p", p, q)
        if p > 0:  # q <= 0: flip the action, landing in the (y,v) chart
            return _chart("blp114", "case2p", p, 3 * p - q)
        if p < 0:
            if q > 3 * p:
                return _chart("blp114", "case2p", -p, q - 3 * p)
            if q == 3 * p:
                raise DegenerateWeightError(f"weights {lam} degenerate on the chart")
            if q > 4 * p:
                return _chart("blp114", "case1p", q - 4 * p, 3 * p - q)
            return _chart("blp114", "case3p", -p, -q)
        raise DegenerateWeightError(f"weights {lam} fix the chart coordinate")
    raise ValueError(f"unknown surface {surface!r}")


# ---------------------------------------------------------------------------
# chart-local monomial expansion


@dataclass(frozen=True)
class MonomialSupport:
    chart_tag: str
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("empty local support")


_LOCAL_MAPS = {
    # (y-exp, z-exp) -> exponents in the chart's two local coordinates
    "case2-yv": lambda s, i, j: (i + j - 2, j),
    "case2-zu": lambda s, i, j: (i + j - 2, i),
    "case1-010": lambda s, i, j: (6 - i - j, j),
    "case1-001": lambda s, i, j: (6 - i - j, i),
    "case1p": lambda s, i, j: (i + j - 2, i),
    "case2p": lambda s, i, j: (i + j - 2, j),
    "case3p": lambda s, i, j: (12 - i - 4 * j, j),
}


def chart_expand(curve: CurvePair, chart: ChartCase) -> MonomialSupport:
    """Exact local exponents of the curve in the chart coordinates."""
    if chart.surface != curve.surface:
        raise ValueError("chart and curve live on different surfaces")
    mapper = _LOCAL_MAPS[chart.tag]
    pts: list[tuple[int, int]] = []
    for m in curve.monomials:
        pt = mapper(curve.surface, m.i, m.j)
        if pt not in pts:
            pts.append(pt)
    return MonomialSupport(chart.tag, tuple(pts))


def multiplicity(support: MonomialSupport, a: int, b: int) -> int:
    """min(a*e + b*f) over the local support."""
    if a <= 0 or b <= 0:
        raise ValueError("weights must be positive")
    return min(a * e + b * f for e, f in support.points)


def log_discrepancy(chart: ChartCase, support: MonomialSupport, c) -> Fraction:
    """(a + b) - c * multiplicity for a smooth-center chart blowup."""
    c = Fraction(c)
    return Fraction(chart.a + chart.b) - c * multiplicity(support, chart.a, chart.b)


# ---------------------------------------------------------------------------
# toric divisor data of a curve


def toric_multiplicities(curve: CurvePair) -> dict[str, int]:
    """Coefficient of each invariant divisor in the curve (class data)."""
    surface = curve.surface
    xs = [m.x_exp(surface) for m in curve.monomials]
    ys = [m.i for m in curve.monomials]
    zs = [m.j for m in curve.monomials]
    mult_p = min(m.i + m.j for m in curve.monomials)
    return {"H_x": min(xs), "H_y": min(ys), "H_z": min(zs), "E": mult_p - 2}


def lambda_weight(curve: CurvePair, lam: OnePS) -> Optional[int]:
    """Common 1-PS weight of all monomials, or None if not invariant."""
    l1, l2, l3 = lam
    weights = {m.x_exp(curve.surface) * l1 + m.i * l2 + m.j * l3
               for m in curve.monomials}
    if len(weights) == 1:
        return weights.pop()
    return None
