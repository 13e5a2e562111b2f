"""Brute-force model of the toric special fiber as an iterated P^1 tower.

A torus-fixed point is a bit vector: bit k = 0 picks the Schubert section at
level k, bit k = 1 the non-Schubert one.  An invariant curve frees one level
k and fixes every other bit.  Its class depends only on k and the bits above
k: the label is (k) followed by the higher positions whose bit is 1.

:func:`verify_report` checks the counting identities, nonnegative generation
and the Fano verdict against this model, independently of the closed-form
Mori criterion.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Any, Iterator

from .chow import CurveClass, expand, iter_expansions
from .errors import ValidationError
from .extremal import express_in_basis, extremal_basis
from .intersect import canonical_class, is_fano, schubert_dots
from .word import AdmissibleSeq, Word

DEFAULT_MAX_M = 20


@dataclass(frozen=True)
class FixedPoint:
    bits: tuple[int, ...]


@dataclass(frozen=True)
class InvariantCurve:
    level: int
    bits: tuple[int | None, ...]  # None at ``level``

    def endpoints(self) -> tuple[FixedPoint, FixedPoint]:
        k = self.level - 1
        lo = self.bits[:k] + (0,) + self.bits[k + 1 :]
        hi = self.bits[:k] + (1,) + self.bits[k + 1 :]
        return FixedPoint(lo), FixedPoint(hi)  # type: ignore[arg-type]

    def label(self) -> AdmissibleSeq:
        return (self.level,) + tuple(p for p in range(self.level + 1, len(self.bits) + 1) if self.bits[p - 1])


def _guard(w: Word, max_m: int) -> None:
    if w.m < 1:
        raise ValidationError("enumeration needs a nonempty word")
    if w.m > max_m:
        raise ValidationError(f"word length {w.m} exceeds enumeration cap {max_m}; raise the cap to proceed")


def all_fixed_points(w: Word, max_m: int = DEFAULT_MAX_M) -> list[FixedPoint]:
    """All 2^m fixed points in lexicographic order."""
    _guard(w, max_m)
    return [FixedPoint(b) for b in itertools.product((0, 1), repeat=w.m)]


def iter_invariant_curves(w: Word, max_m: int = DEFAULT_MAX_M) -> Iterator[InvariantCurve]:
    _guard(w, max_m)
    m = w.m
    for k in range(1, m + 1):
        for rest in itertools.product((0, 1), repeat=m - 1):
            yield InvariantCurve(k, rest[: k - 1] + (None,) + rest[k - 1 :])


def all_invariant_curves(w: Word, max_m: int = DEFAULT_MAX_M) -> list[InvariantCurve]:
    """All m * 2^(m-1) invariant curves, ordered by level then bits."""
    return list(iter_invariant_curves(w, max_m))


def curve_class_of(w: Word, c: InvariantCurve) -> CurveClass:
    if len(c.bits) != w.m or not 1 <= c.level <= w.m:
        raise ValidationError(f"curve {c} does not belong to a word of length {w.m}")
    return expand(w, c.label())


@dataclass
class Clause:
    name: str
    passed: bool
    witness: Any = None


@dataclass
class Report:
    word: list[int]
    fixed_points: int
    curves: int
    clauses: list[Clause] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def to_json(self) -> dict:
        return {
            "fixed_points": self.fixed_points,
            "curves": self.curves,
            "clauses": [{"name": c.name, "pass": c.passed, "witness": c.witness} for c in self.clauses],
        }


def label_classes(w: Word) -> dict[AdmissibleSeq, CurveClass]:
    """Class of every label, computed incrementally."""
    return {seq: CurveClass.from_sparse(w.m, seq, d) for seq, d in iter_expansions(w)}


def nakai_fano_check(w: Word, classes: dict[AdmissibleSeq, CurveClass] | None = None) -> Clause:
    """Compare the closed-form Fano verdict with -K . c > 0 over all curve classes."""
    anti_k = schubert_dots(w, -canonical_class(w))
    if classes is None:
        values = ((seq, sum(anti_k[p - 1] * dp for p, dp in zip(seq, d))) for seq, d in iter_expansions(w))
    else:
        values = ((seq, sum(a * x for a, x in zip(anti_k, c.coeffs))) for seq, c in classes.items())
    bad = None
    for seq, v in values:
        if v <= 0:
            bad = (seq, v)
            break
    closed_form = is_fano(w)
    nakai = bad is None
    witness = None
    if closed_form != nakai:
        witness = {"is_fano": closed_form, "nakai": nakai}
        if bad is not None:
            witness.update(label=list(bad[0]), anti_canonical_degree=bad[1])
    return Clause("fano_equals_nakai", closed_form == nakai, witness)


def verify_report(w: Word, max_m: int = DEFAULT_MAX_M) -> Report:
    """Enumerate the fiber of ``w`` and check every structural clause."""
    _guard(w, max_m)
    m = w.m
    points = all_fixed_points(w, max_m)
    report = Report(list(w.roots), len(points), 0)

    report.clauses.append(
        Clause("fixed_points_count", len(points) == 2**m, None if len(points) == 2**m else {"expected": 2**m})
    )

    n_curves = 0
    per_label: Counter = Counter()
    bad_edge = None
    for c in iter_invariant_curves(w, max_m):
        n_curves += 1
        per_label[c.label()] += 1
        if bad_edge is None:
            lo, hi = c.endpoints()
            diff = [i for i, (x, y) in enumerate(zip(lo.bits, hi.bits)) if x != y]
            if diff != [c.level - 1]:
                bad_edge = asdict(c)
    report.curves = n_curves
    expected = m * 2 ** (m - 1)
    report.clauses.append(
        Clause(
            "curves_count",
            n_curves == expected and bad_edge is None,
            None if n_curves == expected and bad_edge is None else {"expected": expected, "bad_curve": bad_edge},
        )
    )

    classes = label_classes(w)
    wrong = next(
        ((seq, n) for seq, n in sorted(per_label.items()) if n != 2 ** (seq[0] - 1)),
        None,
    )
    missing = sorted(set(classes) - set(per_label))
    ok = wrong is None and not missing and len(per_label) == 2**m - 1
    witness = None
    if not ok:
        witness = {"label": list(wrong[0]), "count": wrong[1]} if wrong else {"missing": [list(s) for s in missing]}
    report.clauses.append(Clause("label_multiplicity", ok, witness))

    basis = extremal_basis(w)
    negative = None
    for seq, cls in classes.items():
        x = express_in_basis(basis, cls)
        if min(x) < 0:
            negative = {"label": list(seq), "coordinates": list(x)}
            break
    report.clauses.append(Clause("nonnegative_generation", negative is None, negative))

    report.clauses.append(nakai_fano_check(w, classes))
    return report
