"""Divisors on the toric fiber and their intersections with curve classes.

Two divisor bases are supported:

* ``LT`` -- the Lauritzen-Thomsen line bundles 𝓛_1, ..., 𝓛_m, with
  𝓛_j . L_r = 1 if j >= r and beta(j) == beta(r), else 0;
* ``boundary`` -- the Schubert boundary divisors D_i and the non-Schubert
  boundary divisors D'_i, with
  D_i . L_r = 0 (i < r), 1 (i == r), (i, r) (i > r) and D'_i . L_r = [i == r].

The canonical class is K = -sum_i (D_i + D'_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chow import CurveClass
from .errors import ValidationError, checked
from .extremal import ExtremalBasis, extremal_basis
from .word import Word, check_position, pairing_table

LT = "LT"
BOUNDARY = "boundary"


@dataclass(frozen=True)
class DivisorClass:
    basis: str
    lt_coeffs: tuple[int, ...] | None = None
    schubert: tuple[int, ...] | None = None
    nonschubert: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.basis == LT:
            ok = self.lt_coeffs is not None and self.schubert is None and self.nonschubert is None
        elif self.basis == BOUNDARY:
            ok = (
                self.lt_coeffs is None
                and self.schubert is not None
                and self.nonschubert is not None
                and len(self.schubert) == len(self.nonschubert)
            )
        else:
            raise ValidationError(f"unknown divisor basis {self.basis!r}")
        if not ok:
            raise ValidationError(f"coefficient blocks do not match basis tag {self.basis!r}")
        for block in (self.lt_coeffs, self.schubert, self.nonschubert):
            if block is not None and not all(isinstance(a, int) and not isinstance(a, bool) for a in block):
                raise ValidationError(f"divisor coefficients must be integers, got {list(block)}")

    @classmethod
    def lt(cls, coeffs: Sequence[int]) -> DivisorClass:
        return cls(LT, lt_coeffs=tuple(coeffs))

    @classmethod
    def boundary(cls, schubert: Sequence[int], nonschubert: Sequence[int] | None = None) -> DivisorClass:
        schubert = tuple(schubert)
        nonschubert = tuple(nonschubert) if nonschubert is not None else (0,) * len(schubert)
        return cls(BOUNDARY, schubert=schubert, nonschubert=nonschubert)

    @property
    def m(self) -> int:
        return len(self.lt_coeffs if self.basis == LT else self.schubert)  # type: ignore[arg-type]

    def __neg__(self) -> DivisorClass:
        if self.basis == LT:
            return DivisorClass.lt(-a for a in self.lt_coeffs)  # type: ignore[union-attr]
        return DivisorClass.boundary([-a for a in self.schubert], [-b for b in self.nonschubert])  # type: ignore[union-attr]


def lt_dot_schubert(w: Word, j: int, r: int) -> int:
    check_position(w, j)
    check_position(w, r)
    return 1 if j >= r and w.roots[j - 1] == w.roots[r - 1] else 0


def boundary_dot_schubert(w: Word, i: int, r: int, which: str = "schubert") -> int:
    check_position(w, i)
    check_position(w, r)
    if which not in ("schubert", "nonschubert"):
        raise ValidationError(f"which must be 'schubert' or 'nonschubert', got {which!r}")
    if i < r:
        return 0
    if i == r:
        return 1
    return pairing_table(w)[i - 1][r - 1] if which == "schubert" else 0


def schubert_dots(w: Word, D: DivisorClass) -> list[int]:
    """D . L_r for r = 1..m."""
    if D.m != w.m:
        raise ValidationError(f"divisor has length {D.m}, word has length {w.m}")
    m = w.m
    if D.basis == LT:
        a = D.lt_coeffs
        return [
            checked(sum(a[j - 1] for j in range(r, m + 1) if w.roots[j - 1] == w.roots[r - 1]))  # type: ignore[index]
            for r in range(1, m + 1)
        ]
    table = pairing_table(w)
    a, b = D.schubert, D.nonschubert
    return [
        checked(a[r - 1] + b[r - 1] + sum(a[i - 1] * table[i - 1][r - 1] for i in range(r + 1, m + 1)))  # type: ignore[index]
        for r in range(1, m + 1)
    ]


def divisor_dot_curve(w: Word, D: DivisorClass, c: CurveClass) -> int:
    if len(c) != w.m:
        raise ValidationError(f"curve class has length {len(c)}, word has length {w.m}")
    dots = schubert_dots(w, D)
    return checked(sum(x * y for x, y in zip(dots, c.coeffs) if y))


def canonical_class(w: Word) -> DivisorClass:
    return DivisorClass.boundary((-1,) * w.m, (-1,) * w.m)


def canonical_dot_schubert(w: Word, r: int) -> int:
    """K . L_r = -2 - sum_{j>r} (j, r)."""
    check_position(w, r)
    table = pairing_table(w)
    return -2 - sum(table[j - 1][r - 1] for j in range(r + 1, w.m + 1))


def lt_to_boundary(w: Word, j: int) -> tuple[int, ...]:
    """Coefficients a_{1j}, ..., a_{mj} with 𝓛_j = sum_i a_{ij} D_i (zero for i > j)."""
    check_position(w, j)
    table = pairing_table(w)
    a = [0] * w.m
    a[j - 1] = 1
    for r in range(j - 1, 0, -1):
        rhs = lt_dot_schubert(w, j, r)
        a[r - 1] = checked(rhs - sum(a[i - 1] * table[i - 1][r - 1] for i in range(r + 1, j + 1)))
    return tuple(a)


def to_boundary(w: Word, D: DivisorClass) -> DivisorClass:
    """Rewrite an LT-tagged divisor in the boundary basis."""
    if D.basis == BOUNDARY:
        return D
    if D.m != w.m:
        raise ValidationError(f"divisor has length {D.m}, word has length {w.m}")
    total = [0] * w.m
    for j, aj in enumerate(D.lt_coeffs, 1):  # type: ignore[arg-type]
        if aj:
            for i, aij in enumerate(lt_to_boundary(w, j)):
                total[i] = checked(total[i] + aj * aij)
    return DivisorClass.boundary(total)


def _later_pairings(w: Word, r: int) -> list[int]:
    table = pairing_table(w)
    return [table[j - 1][r - 1] for j in range(r + 1, w.m + 1)]


def mori_failure(w: Word, r: int) -> str | None:
    """Why L_r is not a Mori ray, or None if it is one."""
    check_position(w, r)
    later = _later_pairings(w, r)
    for j, v in enumerate(later, r + 1):
        if v > 0:
            return f"L_{r} not extremal (({j},{r})={v})"
    negatives = [(j, v) for j, v in enumerate(later, r + 1) if v < 0]
    if not negatives or (len(negatives) == 1 and negatives[0][1] == -1):
        return None
    shown = ", ".join(f"({j},{r})={v}" for j, v in negatives)
    return f"L_{r} extremal but K.L_{r}={canonical_dot_schubert(w, r)} >= 0 ({shown})"


def is_mori_ray(w: Word, r: int) -> bool:
    """L_r is Mori iff every later (j, r) <= 0 and the negative ones are at most a single -1."""
    return mori_failure(w, r) is None


def mori_rays(w: Word) -> list[int]:
    if w.m == 0:
        raise ValidationError("Mori rays of the empty word are undefined")
    return [r for r in range(1, w.m + 1) if is_mori_ray(w, r)]


def is_fano(w: Word) -> bool:
    if w.m == 0:
        raise ValidationError("Fano test of the empty word is undefined")
    return all(is_mori_ray(w, r) for r in range(1, w.m + 1))


def ray_intersections(w: Word, D: DivisorClass, basis: ExtremalBasis | None = None) -> list[int]:
    """D . L_j(w) for every ray of the extremal basis."""
    basis = basis or extremal_basis(w)
    dots = schubert_dots(w, D)
    return [checked(sum(x * y for x, y in zip(dots, ray.coeffs) if y)) for ray in basis.rays]


def toric_ample(w: Word, D: DivisorClass, basis: ExtremalBasis | None = None) -> bool:
    """Nakai test on the toric fiber: D . L_j(w) > 0 for every extremal ray."""
    return all(v > 0 for v in ray_intersections(w, D, basis))


def bsdh_ample(D: DivisorClass) -> bool:
    """Ampleness on the BSDH variety: every LT coefficient strictly positive."""
    if D.basis != LT:
        raise ValidationError("bsdh_ample needs an LT-tagged divisor")
    return all(a > 0 for a in D.lt_coeffs)  # type: ignore[union-attr]


def to_lt(w: Word, D: DivisorClass) -> DivisorClass | None:
    """Rewrite a boundary divisor in the LT basis.

    Returns None when a non-Schubert coefficient is nonzero: those divisors
    live only on the toric fiber and have no LT expression.
    """
    if D.basis == LT:
        return D
    if D.m != w.m:
        raise ValidationError(f"divisor has length {D.m}, word has length {w.m}")
    if any(D.nonschubert):  # type: ignore[arg-type]
        return None
    columns = [lt_to_boundary(w, j) for j in range(1, w.m + 1)]
    x = [0] * w.m
    for i in range(w.m, 0, -1):
        x[i - 1] = checked(D.schubert[i - 1] - sum(x[j - 1] * columns[j - 1][i - 1] for j in range(i + 1, w.m + 1)))  # type: ignore[index]
    return DivisorClass.lt(x)
