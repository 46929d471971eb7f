"""Rational-lattice surface models: intersection form, effective-cone data,
nefness and pseudo-effectivity tests, and exact Zariski decomposition.

A model fixes a basis of the Neron-Severi lattice, the Gram matrix of the
intersection form, a list of effective curve classes that span the effective
cone (every negative class among them generates an extremal ray), the
anticanonical class and a few named divisor classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import render_fraction

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vec(*entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


def solve_linear(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Solve a square rational system by Gaussian elimination; None if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


class NotPseudoEffectiveError(ValueError):
    """Input class lies outside the effective cone."""

    def __init__(self, message: str, separating: Optional[tuple[str, Vec]] = None):
        super().__init__(message)
        self.separating = separating


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: Vec
    negative_support: tuple[tuple[str, Fraction], ...]

    @property
    def support_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.negative_support)


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    basis: tuple[str, ...]
    gram: Mat
    cone: tuple[tuple[str, Vec], ...]
    anticanonical: Vec
    degree: Fraction
    classes: dict[str, Vec] = field(default_factory=dict)
    exceptional: Optional[str] = None

    # -- basic intersection theory ------------------------------------------

    def rank(self) -> int:
        return len(self.basis)

    def intersect(self, d1: Vec, d2: Vec) -> Fraction:
        if len(d1) != self.rank() or len(d2) != self.rank():
            raise ValueError(f"{self.name}: dimension mismatch")
        return sum((d1[i] * self.gram[i][j] * d2[j]
                    for i in range(self.rank()) for j in range(self.rank())),
                   Fraction(0))

    def self_intersection(self, d: Vec) -> Fraction:
        return self.intersect(d, d)

    def cone_class(self, key: str) -> Vec:
        for name, c in self.cone:
            if name == key:
                return c
        if key in self.classes:
            return self.classes[key]
        raise KeyError(f"{self.name}: no class named {key!r}")

    def is_nef(self, d: Vec) -> bool:
        return all(self.intersect(d, c) >= 0 for _, c in self.cone)

    def is_pseudoeffective(self, d: Vec) -> bool:
        return self._cone_coordinates(d) is not None

    def _cone_coordinates(self, d: Vec) -> Optional[dict[str, Fraction]]:
        """Nonnegative generator combination equal to d, if one exists.

        By Caratheodory it suffices to scan linearly independent subsets.
        """
        if is_zero_vec(d):
            return {}
        gens = list(self.cone)
        n = self.rank()
        from itertools import combinations

        for size in range(1, min(n, len(gens)) + 1):
            for subset in combinations(range(len(gens)), size):
                cols = [gens[i][1] for i in subset]
                sol = _solve_rectangular(cols, d)
                if sol is None:
                    continue
                if all(x >= 0 for x in sol):
                    return {gens[i][0]: x for i, x in zip(subset, sol) if x != 0}
        return None

    def _separating_nef_class(self, d: Vec) -> Optional[tuple[str, Vec]]:
        """A nef class w with w.d < 0, certifying d not pseudo-effective."""
        from itertools import combinations

        n = self.rank()
        gens = list(self.cone)
        for subset in combinations(range(len(gens)), n - 1):
            rows = [[self.intersect(gens[i][1], b) for b in _basis_vectors(n)] for i in subset]
            # candidate w solves w.C = 0 for the subset; parametrize kernel
            w = _kernel_vector(rows)
            if w is None:
                continue
            for cand in (w, vscale(-1, w)):
                if all(self.intersect(cand, c) >= 0 for _, c in gens) and self.intersect(cand, d) < 0:
                    label = "perp(" + ",".join(gens[i][0] for i in subset) + ")"
                    return label, cand
        return None

    # -- Zariski decomposition -------------------------------------------

    def zariski_decompose(self, d: Vec) -> ZariskiDecomposition:
        """Unique D = P + N with P nef, P.N_i = 0, Gram(N) negative definite."""
        if not self.is_pseudoeffective(d):
            sep = self._separating_nef_class(d)
            if sep is not None:
                raise NotPseudoEffectiveError(
                    f"{self.name}: class not pseudo-effective; nef class "
                    f"{sep[0]} = {fmt_vec(sep[1])} pairs negatively", sep)
            raise NotPseudoEffectiveError(f"{self.name}: class not pseudo-effective")
        gens = list(self.cone)
        support: set[int] = {i for i, (_, c) in enumerate(gens) if self.intersect(d, c) < 0}
        for _ in range(len(gens) + 2):
            idx = sorted(support)
            coeffs = self._support_coefficients(d, idx)
            p = d
            for i, x in zip(idx, coeffs):
                p = vsub(p, vscale(x, gens[i][1]))
            violated = {i for i, (_, c) in enumerate(gens)
                        if i not in support and self.intersect(p, c) < 0}
            if not violated:
                if any(x < 0 for x in coeffs):
                    raise ArithmeticError(
                        f"{self.name}: negative Zariski coefficient; cone data inconsistent")
                self._check_negative_definite(idx)
                negative = tuple((gens[i][0], x) for i, x in zip(idx, coeffs) if x != 0)
                return ZariskiDecomposition(positive=p, negative_support=negative)
            support |= violated
        raise ArithmeticError(f"{self.name}: Zariski iteration did not stabilize")

    def _support_coefficients(self, d: Vec, idx: list[int]) -> list[Fraction]:
        if not idx:
            return []
        gens = [self.cone[i][1] for i in idx]
        gram = [[self.intersect(gi, gj) for gj in gens] for gi in gens]
        rhs = [self.intersect(d, gi) for gi in gens]
        sol = solve_linear(gram, rhs)
        if sol is None:
            raise ArithmeticError(
                f"{self.name}: singular Gram block for support {idx}")
        return sol

    def _check_negative_definite(self, idx: list[int]) -> None:
        gens = [self.cone[i][1] for i in idx]
        gram = [[self.intersect(gi, gj) for gj in gens] for gi in gens]
        for k in range(1, len(gens) + 1):
            minor = _det([row[:k] for row in gram[:k]])
            if (minor > 0) != (k % 2 == 0) or minor == 0:
                raise ArithmeticError(
                    f"{self.name}: support Gram block not negative definite")

    def volume(self, d: Vec) -> Fraction:
        z = self.zariski_decompose(d)
        return self.self_intersection(z.positive)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "basis": list(self.basis),
            "gram": [[render_fraction(x) for x in row] for row in self.gram],
            "cone_generators": [
                {"name": n, "coords": [render_fraction(x) for x in c]} for n, c in self.cone
            ],
            "anticanonical": [render_fraction(x) for x in self.anticanonical],
            "degree": render_fraction(self.degree),
            "classes": {k: [render_fraction(x) for x in v] for k, v in sorted(self.classes.items())},
        }


def fmt_vec(v: Vec) -> str:
    return "(" + ",".join(render_fraction(x) for x in v) + ")"


def _basis_vectors(n: int) -> list[Vec]:
    return [tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)]


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _solve_rectangular(cols: list[Vec], d: Vec) -> Optional[list[Fraction]]:
    """Solve sum x_i cols[i] = d exactly; None if inconsistent/singular."""
    n = len(d)
    k = len(cols)
    aug = [[cols[j][i] for j in range(k)] + [d[i]] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    # non-pivot columns would make the solution non-unique; treat as dependent
    if len(pivots) < k:
        return None
    for r in range(row, n):
        if aug[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for r, c in pivots:
        sol[c] = aug[r][k]
    return sol


def _kernel_vector(rows: list[list[Fraction]]) -> Optional[Vec]:
    """A nonzero rational vector orthogonal to the given row functionals."""
    if not rows:
        return None
    n = len(rows[0])
    m = [list(r) for r in rows]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    sol = [Fraction(0)] * n
    sol[c0] = Fraction(1)
    for r, c in enumerate(pivots):
        sol[c] = -m[r][c0]
    return tuple(sol)


# ---------------------------------------------------------------------------
# builtin models


def _model_f1() -> SurfaceModel:
    """Plane blown up at [1,0,0]; basis (H, E) with H the line class."""
    gram = (vec(1, 0), vec(0, -1))
    fiber = vec(1, -1)
    e = vec(0, 1)
    classes = {"H_x": vec(1, 0), "H_y": fiber, "H_z": fiber, "E": e, "H": vec(1, 0)}
    return SurfaceModel(
        name="f1", basis=("H", "E"), gram=gram,
        cone=(("E", e), ("fiber", fiber)),
        anticanonical=vec(3, -1), degree=Fraction(8), classes=classes)


def _model_blp114() -> SurfaceModel:
    """Weighted plane P(1,1,4) blown up at the smooth point [1,0,0]."""
    gram = (vec(Fraction(-3, 4), 1), vec(1, -1))
    hy = vec(1, 0)
    e = vec(0, 1)
    classes = {"H_y": hy, "E": e, "H_x": vec(1, 1), "H_z": vec(4, 3)}
    return SurfaceModel(
        name="blp114", basis=("H_y", "E"), gram=gram,
        cone=(("H_y", hy), ("E", e)),
        anticanonical=vec(6, 5), degree=Fraction(8), classes=classes)


def _model_index3m() -> SurfaceModel:
    """Minimal resolution of the index-3 degree-8 surface (rank-4 lattice)."""
    gram = (vec(-5, 1, 0, 0), vec(1, -2, 1, 1), vec(0, 1, -1, 0), vec(0, 1, 0, -1))
    f1 = vec(1, 0, 0, 0)
    f2 = vec(0, 1, 0, 0)
    e1 = vec(0, 0, 1, 0)
    e2 = vec(0, 0, 0, 1)
    anti = vec(Fraction(4, 3), Fraction(20, 3), 6, 6)
    classes = {"F1": f1, "F2": f2, "E1": e1, "E2": e2,
               "qF": vec(1, Fraction(1, 2), 0, 0)}
    return SurfaceModel(
        name="index3m", basis=("F1", "F2", "E1", "E2"), gram=gram,
        cone=(("F1", f1), ("F2", f2), ("E1", e1), ("E2", e2)),
        anticanonical=anti, degree=Fraction(8), classes=classes,
        exceptional="qF")


def _model_blp114_quotient_res() -> SurfaceModel:
    """Minimal resolution of the quarter point on Bl P(1,1,4); F is the (-4)-curve."""
    gram = (vec(-4, 0, 1), vec(0, -1, 1), vec(1, 1, -1))
    f = vec(1, 0, 0)
    e = vec(0, 1, 0)
    hy = vec(0, 0, 1)
    anti = vec(Fraction(3, 2), 5, 6)
    return SurfaceModel(
        name="blp114-quotient-res", basis=("F", "E", "H_y"), gram=gram,
        cone=(("F", f), ("E", e), ("H_y", hy)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "E": e, "H_y": hy}, exceptional="F")


def _check_weights(a: int, b: int) -> tuple[int, int]:
    from math import gcd as _g
    if a <= 0 or b <= 0:
        raise ValueError("blowup weights must be positive; degenerate 1-PS "
                         "weights are handled by toric divisor valuations")
    if _g(a, b) != 1:
        raise ValueError("blowup weights must be coprime")
    return a, b


def _model_f1_case1(a: int, b: int) -> SurfaceModel:
    """Weight-(a,b) blowup of F1 at a torus-fixed point away from E.

    Basis (F, Ebar, Hzbar): Hzbar is the line through both blowup centers,
    Hxbar = (b-a)F + Ebar + Hzbar the line through the new center only.
    """
    a, b = _check_weights(a, b)
    gram = (vec(Fraction(-1, a * b), 0, Fraction(1, a)),
            vec(0, -1, 1),
            vec(Fraction(1, a), 1, Fraction(-b, a)))
    f = vec(1, 0, 0)
    ebar = vec(0, 1, 0)
    hz = vec(0, 0, 1)
    hx = vec(b - a, 1, 1)
    anti = vec(3 * b, 2, 3)
    return SurfaceModel(
        name=f"f1-case1({a},{b})", basis=("F", "Ebar", "Hzbar"), gram=gram,
        cone=(("F", f), ("Ebar", ebar), ("Hzbar", hz), ("Hxbar", hx)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "Ebar": ebar, "Hzbar": hz, "Hxbar": hx},
        exceptional="F")


def _model_f1_case2(a: int, b: int) -> SurfaceModel:
    """Weight-(a,b) blowup of F1 centered at a fixed point on E.

    Basis (F, Ebar, Lbar) with Lbar the invariant fiber through the center.
    """
    a, b = _check_weights(a, b)
    gram = (vec(Fraction(-1, a * b), Fraction(1, b), Fraction(1, a)),
            vec(Fraction(1, b), Fraction(-(a + b), b), 0),
            vec(Fraction(1, a), 0, Fraction(-b, a)))
    f = vec(1, 0, 0)
    ebar = vec(0, 1, 0)
    lbar = vec(0, 0, 1)
    anti = vec(2 * a + 3 * b, 2, 3)
    return SurfaceModel(
        name=f"f1-case2({a},{b})", basis=("F", "Ebar", "Lbar"), gram=gram,
        cone=(("F", f), ("Ebar", ebar), ("Lbar", lbar)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "Ebar": ebar, "Lbar": lbar},
        exceptional="F")


def _model_blp114_case1p(a: int, b: int) -> SurfaceModel:
    """Weight-(a,b) blowup of Bl P(1,1,4) at the point of E on H_y."""
    a, b = _check_weights(a, b)
    gram = (vec(Fraction(-1, a * b), Fraction(1, b), Fraction(1, a)),
            vec(Fraction(1, b), Fraction(-(a + b), b), 0),
            vec(Fraction(1, a), 0, Fraction(-3, 4) - Fraction(b, a)))
    f = vec(1, 0, 0)
    ebar = vec(0, 1, 0)
    hy = vec(0, 0, 1)
    anti = vec(5 * a + 6 * b, 5, 6)
    return SurfaceModel(
        name=f"blp114-case1p({a},{b})", basis=("F", "Ebar", "Hybar"), gram=gram,
        cone=(("F", f), ("Ebar", ebar), ("Hybar", hy)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "Ebar": ebar, "Hybar": hy,
                 "Hzbar": vec(3 * a + 4 * b, 3, 4)},
        exceptional="F")


def _model_blp114_case2p(a: int, b: int) -> SurfaceModel:
    """Weight-(a,b) blowup of Bl P(1,1,4) at the point of E on H_z."""
    a, b = _check_weights(a, b)
    gram = (vec(Fraction(-1, a * b), Fraction(1, b), 0),
            vec(Fraction(1, b), Fraction(-(a + b), b), 1),
            vec(0, 1, Fraction(-3, 4)))
    f = vec(1, 0, 0)
    ebar = vec(0, 1, 0)
    hy = vec(0, 0, 1)
    hz = vec(3 * a - b, 3, 4)
    anti = vec(5 * a, 5, 6)
    return SurfaceModel(
        name=f"blp114-case2p({a},{b})", basis=("F", "Ebar", "Hybar"), gram=gram,
        cone=(("F", f), ("Ebar", ebar), ("Hybar", hy), ("Hzbar", hz)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "Ebar": ebar, "Hybar": hy, "Hzbar": hz},
        exceptional="F")


def _model_blp114_case3p(a: int, b: int) -> SurfaceModel:
    """Weight-(a,b) blowup of P(1,1,4) at [0,1,0], pulled back to Bl P(1,1,4)."""
    a, b = _check_weights(a, b)
    gram = (vec(Fraction(-1, a * b), Fraction(1, b), 0),
            vec(Fraction(1, b), Fraction(1, 4) - Fraction(a, b), 0),
            vec(0, 0, -1))
    f = vec(1, 0, 0)
    hx = vec(0, 1, 0)
    ebar = vec(0, 0, 1)
    hy = vec(a, 1, -1)
    hz = vec(4 * a - b, 4, -1)
    anti = vec(6 * a, 6, -1)
    return SurfaceModel(
        name=f"blp114-case3p({a},{b})", basis=("F", "Hxbar", "Ebar"), gram=gram,
        cone=(("F", f), ("Hxbar", hx), ("Ebar", ebar), ("Hybar", hy), ("Hzbar", hz)),
        anticanonical=anti, degree=Fraction(8),
        classes={"F": f, "Hxbar": hx, "Ebar": ebar, "Hybar": hy, "Hzbar": hz},
        exceptional="F")


_FIXED_MODELS = {
    "f1": _model_f1,
    "blp114": _model_blp114,
    "index3m": _model_index3m,
    "blp114-quotient-res": _model_blp114_quotient_res,
}

_WEIGHTED_MODELS = {
    "f1-case1": _model_f1_case1,
    "f1-case2": _model_f1_case2,
    "blp114-case1p": _model_blp114_case1p,
    "blp114-case2p": _model_blp114_case2p,
    "blp114-case3p": _model_blp114_case3p,
}


def builtin_surface(ident: str, a: Optional[int] = None, b: Optional[int] = None) -> SurfaceModel:
    """Builtin surface by id; weighted-blowup ids require coprime weights."""
    if ident in _FIXED_MODELS:
        if a is not None or b is not None:
            raise ValueError(f"{ident} takes no weights")
        return _FIXED_MODELS[ident]()
    if ident in _WEIGHTED_MODELS:
        if a is None or b is None:
            raise ValueError(f"{ident} requires weights a, b")
        return _WEIGHTED_MODELS[ident](a, b)
    raise ValueError(f"unknown surface id {ident!r}")


def builtin_ids() -> list[str]:
    return sorted(_FIXED_MODELS) + sorted(_WEIGHTED_MODELS)
