"""Parameter transforms between the wall-crossing coefficient and the
lattice-model / cone-construction coordinates, plus arithmetic sanity
checkers (budget formula, local index bound, exceptional-dimension audit).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .atlas import AUDIT_VERIFIED, WallAtlas, bundled_atlas
from .exactnum import render_fraction

POLE = "pole"

# predicted parameter values 1/n on the lattice side
PREDICTED_INVERSES = (1, 2, 3, 4, 6, 8, 10, 12, 16, 25, 27, 28, 31)


def hkl_param(c: Union[Fraction, int, str]) -> Union[Fraction, str]:
    """s(c) = (1-2c)/(56c-4); exact, with a pole marker at c = 1/14."""
    c = Fraction(c)
    den = 56 * c - 4
    if den == 0:
        return POLE
    return (1 - 2 * c) / den


def hkl_param_inverse(s: Union[Fraction, int, str]) -> Fraction:
    """c(s) = (4s+1)/(56s+2), the exact inverse of hkl_param."""
    s = Fraction(s)
    return (4 * s + 1) / (56 * s + 2)


def cone_threshold(c: Union[Fraction, int, str]) -> Fraction:
    """(4c+1)/3: the coefficient transform of the cone construction."""
    return (4 * Fraction(c) + 1) / 3


# printed threshold families of the cone construction
CONE_FAMILY_F1 = tuple(Fraction(11 + n, 27 + n) for n in range(1, 6)) + tuple(
    Fraction(3 + n, 11 + n) for n in (6, 7, 8, 9, 11))
CONE_FAMILY_BLP114 = tuple(Fraction(36 + m, 52 + m) for m in (1, 3, 4, 7))


def map_walls(atlas: Optional[WallAtlas] = None) -> dict:
    """Image of every wall under s(c), checked against the predicted set."""
    atlas = atlas or bundled_atlas()
    report: dict = {"pole": None, "images": {}, "match": True, "diffs": []}
    predicted = sorted(Fraction(1, n) for n in PREDICTED_INVERSES)
    images: list[Fraction] = []
    for surface in ("f1", "blp114"):
        rows = []
        for w in atlas.walls(surface):
            s = hkl_param(w)
            if s == POLE:
                report["pole"] = render_fraction(w)
                rows.append({"wall": render_fraction(w), "s": POLE})
                continue
            images.append(s)
            rows.append({"wall": render_fraction(w), "s": render_fraction(s),
                         "inverse_n": s.denominator if s.numerator == 1 else None})
        report["images"][surface] = rows
    multiset = sorted(images)
    expected_multiset = sorted(predicted + [Fraction(1, 28)])  # 1/28 is hit twice
    if multiset != expected_multiset:
        report["match"] = False
        report["diffs"] = [
            f"images {sorted(map(str, multiset))} != predicted "
            f"{sorted(map(str, expected_multiset))}"]
    report["predicted"] = [f"1/{n}" for n in PREDICTED_INVERSES]
    report["hyperelliptic_images"] = sorted(
        (render_fraction(hkl_param(w)) for w in atlas.walls("f1")
         if hkl_param(w) != POLE), key=lambda s: Fraction(s), reverse=True)
    report["unigonal_images"] = sorted(
        (render_fraction(hkl_param(w)) for w in atlas.walls("blp114")),
        key=lambda s: Fraction(s), reverse=True)
    return report


def cone_report(atlas: Optional[WallAtlas] = None) -> dict:
    """Images of all walls under (4c+1)/3 versus the printed families."""
    atlas = atlas or bundled_atlas()
    rows = []
    ok = True
    for surface, family in (("f1", CONE_FAMILY_F1), ("blp114", CONE_FAMILY_BLP114)):
        walls = atlas.walls(surface)
        for w in walls:
            img = cone_threshold(w)
            listed = img in family
            rows.append({
                "surface": surface,
                "wall": render_fraction(w),
                "image": render_fraction(img),
                "listed": listed,
                "note": "" if listed else "image not in the printed families",
            })
            if not listed and not (surface == "f1" and w == Fraction(2, 7)):
                ok = False
    covered = {Fraction(r["image"]) for r in rows if r["listed"]}
    missing = [render_fraction(v) for v in CONE_FAMILY_F1 + CONE_FAMILY_BLP114
               if v not in covered]
    return {"rows": rows, "families_covered": not missing, "missing": missing,
            "match": ok and not missing}


# ---------------------------------------------------------------------------
# numeric sanity checkers


@dataclass(frozen=True)
class TSingularity:
    """ADE or cyclic quotient type admitting a one-parameter smoothing."""

    kind: str  # "A" | "D" | "E" | "cyclic"
    n: int
    l: int = 0
    a: int = 0

    def __post_init__(self):
        if self.kind in ("A", "D", "E"):
            if self.n < 1:
                raise ValueError("rank must be positive")
        elif self.kind == "cyclic":
            from math import gcd
            if self.l < 1 or self.n < 1 or gcd(self.a, self.n) != 1:
                raise ValueError("cyclic type needs l,n >= 1 and gcd(a, n) = 1")
        else:
            raise ValueError(f"unknown singularity kind {self.kind!r}")

    @property
    def milnor(self) -> int:
        if self.kind == "cyclic":
            return self.l - 1
        return self.n


def noether_budget(k2: Union[Fraction, int], rho: int,
                   sings: tuple[TSingularity, ...] = ()) -> Fraction:
    """10 - (K^2 + rho + sum of Milnor numbers); zero means consistent."""
    total = Fraction(k2) + rho + sum(s.milnor for s in sings)
    return Fraction(10) - total


def cartier_index_max(d: Union[Fraction, int], c: Union[Fraction, str], ord_mult: int) -> int:
    """Largest n with (4d/9)(1-2c)^2 <= (2 - c*ord)^2 / n^2, exactly."""
    d = Fraction(d)
    c = Fraction(c)
    if d <= 0:
        raise ValueError("degree must be positive")
    if not 0 <= c < Fraction(1, 2):
        raise ValueError("coefficient must lie in [0, 1/2)")
    if ord_mult < 0:
        raise ValueError("multiplicity must be nonnegative")
    skoda = 2 - c * ord_mult
    if skoda <= 0:
        raise ValueError("positivity bound violated: 2 - c*ord <= 0")
    bound = 9 * skoda**2 / (4 * d * (1 - 2 * c) ** 2)
    # largest n with n^2 <= bound
    floor_bound = bound.numerator // bound.denominator
    return isqrt(floor_bound)


# ---------------------------------------------------------------------------
# dimension audit


def audit_dim_formula(atlas: Optional[WallAtlas] = None) -> dict:
    """Residual of dim E^- + dim E^+ = 17 + dim Z per wall branch."""
    atlas = atlas or bundled_atlas()
    rows = []
    verified_ok = True
    for b in atlas.branches:
        if b.e_minus_dim is None or b.nl_dim is None:
            rows.append({"surface": b.surface, "wall": render_fraction(b.wall),
                         "branch": b.nl_label or b.singularity,
                         "residual": None, "note": "no exceptional data"})
            continue
        residual = b.e_minus_dim + b.nl_dim - 17 - b.dim_center
        verified = (b.surface, b.wall, b.nl_label) in AUDIT_VERIFIED
        note = ""
        if residual != 0:
            note = "anomaly (reported, not asserted)"
        if verified and residual != 0:
            verified_ok = False
            note = "VERIFIED BRANCH FAILED"
        rows.append({"surface": b.surface, "wall": render_fraction(b.wall),
                     "branch": b.nl_label, "e_minus": b.e_minus_dim,
                     "e_plus": b.nl_dim, "dim_center": b.dim_center,
                     "residual": residual, "note": note})
    anomalies = [r for r in rows if r["residual"] not in (0, None)]
    return {"rows": rows, "verified_ok": verified_ok,
            "anomalies": [f"{r['surface']} {r['wall']} {r['branch']}: "
                          f"residual {r['residual']}" for r in anomalies]}
