"""Cartan matrices and arithmetic in the coroot lattice.

The Cartan convention is fixed throughout the package::

    cartan[i][j] = <alpha_j, alpha_i^vee>

so row ``i`` of the matrix is the functional "pair against the i-th simple
coroot".  All public functions take 1-based root indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError, checked

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class RootSystem:
    """A validated generalized Cartan matrix.

    ``finite`` records whether the symmetrized matrix is positive definite,
    i.e. whether the matrix is of finite type.  ``name`` is set only for
    systems built by :func:`named_root_system`.
    """

    cartan: tuple[tuple[int, ...], ...]
    finite: bool
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def __str__(self):
        return self.name or f"Cartan{[list(r) for r in self.cartan]}"


@dataclass(frozen=True)
class Coroot:
    """Integer vector in the basis of simple coroots."""

    coeffs: tuple[int, ...]

    @classmethod
    def simple(cls, rank: int, i: int) -> Coroot:
        return cls(tuple(1 if k == i - 1 else 0 for k in range(rank)))

    def __str__(self):
        terms = [f"{c}*a{i + 1}^v" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def _check_index(rs: RootSystem, i: int, what: str = "root index") -> int:
    if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= rs.rank:
        raise ValidationError(f"{what} {i!r} out of range 1..{rs.rank}")
    return i - 1


def _symmetrizer(cartan) -> list[Fraction] | None:
    """Positive d_i with d_i*C[i][j] == d_j*C[j][i], or None if no such d exists."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                want = d[i] * cartan[i][j] / cartan[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    return d  # type: ignore[return-value]


def _leading_minors_positive(matrix: list[list[Fraction]]) -> bool:
    # Gaussian elimination without pivoting: the k-th pivot is the ratio of
    # consecutive leading principal minors, so all pivots > 0 iff all minors > 0.
    a = [row[:] for row in matrix]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def validate_cartan(cartan: Sequence[Sequence[int]], name: str | None = None) -> RootSystem:
    """Check the generalized Cartan matrix axioms and classify finite type.

    Raises :class:`ValidationError` naming the offending entry on failure.
    Non-finite (affine, hyperbolic, ...) matrices are accepted and flagged.
    """
    try:
        rows = [list(r) for r in cartan]
    except TypeError:
        raise ValidationError("Cartan matrix must be a list of rows") from None
    n = len(rows)
    if n == 0:
        raise ValidationError("Cartan matrix must be nonempty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValidationError(f"Cartan matrix is not square: row {i + 1} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"Cartan entry ({i + 1},{j + 1}) = {v!r} is not an integer")
    for i in range(n):
        if rows[i][i] != 2:
            raise ValidationError(f"Cartan diagonal entry ({i + 1},{i + 1}) = {rows[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise ValidationError(f"positive off-diagonal Cartan entry ({i + 1},{j + 1}) = {rows[i][j]}")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise ValidationError(
                    f"asymmetric zero pattern at ({i + 1},{j + 1}) = {rows[i][j]} vs ({j + 1},{i + 1}) = {rows[j][i]}"
                )

    d = _symmetrizer(rows)
    finite = False
    if d is not None:
        sym = [[d[i] * rows[i][j] for j in range(n)] for i in range(n)]
        finite = _leading_minors_positive(sym)
    return RootSystem(tuple(tuple(r) for r in rows), finite, name)


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def _link(c, i, j, cij=-1, cji=-1):
    c[i - 1][j - 1] = cij
    c[j - 1][i - 1] = cji


def named_root_system(family: str, rank: int) -> RootSystem:
    """Cartan matrix of a finite type with Bourbaki numbering.

    ``B_n`` has the short root last, ``C_n`` the long root last, ``F_4`` has
    alpha_1, alpha_2 long and ``G_2`` has alpha_1 short.
    """
    family = str(family).upper()
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not isinstance(rank, int) or family not in valid or not valid[family]:
        raise ValidationError(f"no finite root system of type {family}{rank}")

    if family == "E":
        c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        _link(c, 1, 3)
        _link(c, 2, 4)
        for i in range(3, rank):
            _link(c, i, i + 1)
    else:
        c = _chain(rank)
    if family == "B":
        _link(c, rank - 1, rank, -1, -2)
    elif family == "C":
        _link(c, rank - 1, rank, -2, -1)
    elif family == "D":
        _link(c, rank - 1, rank, 0, 0)
        _link(c, rank - 2, rank)
    elif family == "F":
        _link(c, 2, 3, -1, -2)
    elif family == "G":
        _link(c, 1, 2, -3, -1)
    rs = validate_cartan(c, name=f"{family}{rank}")
    assert rs.finite
    return rs


def parse_type(text: str) -> RootSystem:
    """Parse ``"A3"``, ``"a 3"`` or ``"E_8"`` into a named root system."""
    s = text.replace(" ", "").replace("_", "")
    if len(s) < 2 or not s[1:].isdigit():
        raise ValidationError(f"cannot parse root system type {text!r}")
    return named_root_system(s[0], int(s[1:]))


def pairing(rs: RootSystem, j_root: int, i_root: int) -> int:
    """<alpha_j, alpha_i^vee>, written (j, i) for simple roots."""
    return rs.cartan[_check_index(rs, i_root)][_check_index(rs, j_root)]


def coroot_pairing(rs: RootSystem, g: Coroot, j_root: int) -> int:
    if len(g.coeffs) != rs.rank:
        raise ValidationError(f"coroot has {len(g.coeffs)} coefficients, root system has rank {rs.rank}")
    j = _check_index(rs, j_root)
    return checked(sum(c * rs.cartan[i][j] for i, c in enumerate(g.coeffs) if c))


def dual_reflect(rs: RootSystem, x: Coroot, i_root: int) -> Coroot:
    """s_{alpha_i^vee}(x) = x - <x, alpha_i> alpha_i^vee."""
    i = _check_index(rs, i_root)
    p = coroot_pairing(rs, x, i_root)
    if p == 0:
        return x
    coeffs = list(x.coeffs)
    coeffs[i] = checked(coeffs[i] - p)
    return Coroot(tuple(coeffs))


def iterated_coroot(rs: RootSystem, roots: Sequence[int]) -> Coroot:
    """Reflect alpha_{j_1}^vee successively by the dual reflections of j_2, ..., j_r."""
    if len(roots) == 0:
        raise ValidationError("iterated_coroot needs at least one root index")
    _check_index(rs, roots[0])
    x = Coroot.simple(rs.rank, roots[0])
    for j in roots[1:]:
        x = dual_reflect(rs, x, j)
    return x


def coroot_height(g: Coroot) -> int:
    return sum(g.coeffs)
