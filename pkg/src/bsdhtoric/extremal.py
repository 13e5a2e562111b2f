"""The extremal basis L_1(w), ..., L_m(w) of the curve group.

L_j(w) is the labelled curve L_I whose label I = (j, i_2, i_3, ...) is found
by scanning the suffix word [j-1]w.  Two scans are provided:

``comp``
    i_2 is the first later position carrying the same root as j; each further
    i_r is the first later position with
    c_r = (i_r, i_2) - c_3 (i_r, i_3) - ... - c_{r-1} (i_r, i_{r-1}) < 0.
``weyl``
    same i_2; each further i_r is the first later position at which the dual
    reflection in alpha_{i_r}^vee raises the height of the running coroot
    alpha^vee_{i_2 ... i_{r-1}}.

Both produce the same labels; :func:`extremal_basis` checks that they do.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import CurveClass, expand
from .errors import ConsistencyError, ValidationError, checked
from .rootsys import Coroot, coroot_height, dual_reflect
from .word import AdmissibleSeq, Word, check_position, pairing_table, truncate

ALGORITHMS = ("comp", "weyl")


@dataclass(frozen=True)
class ExtremalBasis:
    """Rays L_j(w) and the labels selecting them, in original word positions."""

    rays: tuple[CurveClass, ...]
    subsequences: tuple[AdmissibleSeq, ...]

    def matrix(self) -> list[list[int]]:
        return [list(r.coeffs) for r in self.rays]


def _scan_comp(w: Word) -> AdmissibleSeq:
    table = pairing_table(w)
    first = w.roots[0]
    i2 = next((k for k in range(2, w.m + 1) if w.roots[k - 1] == first), None)
    if i2 is None:
        return (1,)
    seq = [1, i2]
    c: list[int] = []  # c_3, c_4, ... for the accepted positions i_3, i_4, ...
    for k in range(i2 + 1, w.m + 1):
        row = table[k - 1]
        ck = row[i2 - 1] - sum(cj * row[ij - 1] for cj, ij in zip(c, seq[2:]))
        if checked(ck) < 0:
            seq.append(k)
            c.append(ck)
    return tuple(seq)


def _scan_weyl(w: Word) -> AdmissibleSeq:
    first = w.roots[0]
    i2 = next((k for k in range(2, w.m + 1) if w.roots[k - 1] == first), None)
    if i2 is None:
        return (1,)
    seq = [1, i2]
    x = Coroot.simple(w.rs.rank, first)
    for k in range(i2 + 1, w.m + 1):
        y = dual_reflect(w.rs, x, w.roots[k - 1])
        if coroot_height(y) > coroot_height(x):
            seq.append(k)
            x = y
    return tuple(seq)


def basis_subsequence(w: Word, start: int, algorithm: str = "comp") -> AdmissibleSeq:
    """Label of L_start(w), found on the suffix [start-1]w and shifted back."""
    check_position(w, start)
    scan = {"comp": _scan_comp, "weyl": _scan_weyl}.get(algorithm)
    if scan is None:
        raise ValidationError(f"unknown basis algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    offset = start - 1
    return tuple(p + offset for p in scan(truncate(w, offset, "suffix")))


def extremal_basis(w: Word, algorithm: str = "comp", verify: bool = True) -> ExtremalBasis:
    """Compute all L_j(w).  With ``verify`` the other algorithm is run as well
    and any disagreement raises :class:`ConsistencyError`."""
    if w.m == 0:
        raise ValidationError("extremal basis of the empty word is undefined")
    subs = []
    for j in range(1, w.m + 1):
        seq = basis_subsequence(w, j, algorithm)
        if verify:
            other = "weyl" if algorithm == "comp" else "comp"
            alt = basis_subsequence(w, j, other)
            if alt != seq:
                raise ConsistencyError(
                    f"basis algorithms disagree at position {j} of {w}: {algorithm}={seq}, {other}={alt}",
                    position=j,
                    **{algorithm: seq, other: alt},
                )
        subs.append(seq)
    return ExtremalBasis(tuple(expand(w, s) for s in subs), tuple(subs))


def express_in_basis(basis: ExtremalBasis, c: CurveClass) -> tuple[int, ...]:
    """Integer x with sum_j x[j] * rays[j] == c (forward substitution)."""
    m = len(basis.rays)
    if len(c) != m:
        raise ValidationError(f"curve class has length {len(c)}, basis has {m} rays")
    x: list[int] = []
    for k in range(m):
        x.append(checked(c.coeffs[k] - sum(x[j] * basis.rays[j].coeffs[k] for j in range(k))))
    return tuple(x)
