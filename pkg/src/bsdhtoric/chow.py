"""Classes of torus-invariant curves in the Schubert-line basis L_1, ..., L_m.

A labelled curve L_I, for an admissible sequence I = (i_1 < ... < i_r), is
expanded as sum_k d_{i_k} L_{i_k}.  Three independent routes compute the
coefficients:

* :func:`expand` -- the linear recursion d_{i_1} = 1,
  d_{i_k} = -sum_{j<k} d_{i_j} (i_k, i_j);
* :func:`expand_oracle` -- the two-term relation
  L_I = L_{i_1 I'} - (i_2, i_1) L_{i_2 I'} applied until single positions remain;
* :func:`expand_coroot` -- d_{i_j} = -<alpha^vee_{i_1...i_{j-1}}, alpha_{i_j}>.

:func:`expand` is the one used by everything downstream.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError, checked
from .rootsys import coroot_pairing, iterated_coroot
from .word import AdmissibleSeq, Word, admissible, check_position, pairing_table, pos_pairing

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveClass:
    """Integer coordinates over the Schubert-line basis; ``coeffs[p-1]`` belongs to L_p."""

    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, m: int) -> CurveClass:
        return cls((0,) * m)

    @classmethod
    def from_sparse(cls, m: int, positions: Sequence[int], values: Sequence[int]) -> CurveClass:
        coeffs = [0] * m
        for p, v in zip(positions, values):
            coeffs[p - 1] = v
        return cls(tuple(coeffs))

    def at(self, p: int) -> int:
        return self.coeffs[p - 1]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _same_length(self, other):
        if len(other.coeffs) != len(self.coeffs):
            raise ValidationError(f"curve classes of lengths {len(self.coeffs)} and {len(other.coeffs)}")

    def __add__(self, other: CurveClass) -> CurveClass:
        self._same_length(other)
        return CurveClass(tuple(checked(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        self._same_length(other)
        return CurveClass(tuple(checked(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CurveClass:
        return CurveClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> CurveClass:
        return CurveClass(tuple(checked(k * a) for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for p, c in enumerate(self.coeffs, 1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}L_{p}")
        if not terms:
            return "0"
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def schubert_line(w: Word, r: int) -> CurveClass:
    check_position(w, r)
    return CurveClass.from_sparse(w.m, (r,), (1,))


def _warn_if_large(w: Word, seq: AdmissibleSeq, values: Sequence[int]) -> None:
    # Coefficients are pairings of a simple root with a dual root, so they stay
    # small; this is a report-only sanity bound.
    biggest = max(abs(c) for row in w.rs.cartan for c in row)
    bound = 2 * biggest ** (len(seq) - 1)
    worst = max(abs(v) for v in values)
    if worst > bound:
        log.info("coefficient %d of %s on %s exceeds soft bound %d", worst, seq, w, bound)


def expand(w: Word, I: Iterable[int]) -> CurveClass:
    """Expand L_I in the Schubert-line basis by the linear recursion."""
    seq = admissible(w, tuple(I))
    table = pairing_table(w)
    d: list[int] = [1]
    for ik in seq[1:]:
        row = table[ik - 1]
        d.append(checked(-sum(dj * row[ij - 1] for dj, ij in zip(d, seq))))
    _warn_if_large(w, seq, d)
    return CurveClass.from_sparse(w.m, seq, d)


def _oracle(w: Word, seq: AdmissibleSeq, memo: dict) -> CurveClass:
    # every recursive call is (x,) + a suffix of the top label, so memoising
    # keeps the literal relation quadratic in |I|
    if seq in memo:
        return memo[seq]
    if len(seq) == 1:
        out = CurveClass.from_sparse(w.m, seq, (1,))
    else:
        first, second, rest = seq[0], seq[1], seq[2:]
        c = pos_pairing(w, second, first)
        out = _oracle(w, (first,) + rest, memo) - c * _oracle(w, (second,) + rest, memo)
    memo[seq] = out
    return out


def expand_oracle(w: Word, I: Iterable[int]) -> CurveClass:
    """Expand L_I by the literal two-term relation L_I = L_{i_1 I'} - (i_2, i_1) L_{i_2 I'}."""
    return _oracle(w, admissible(w, tuple(I)), {})


def expand_coroot(w: Word, I: Iterable[int]) -> CurveClass:
    """Expand L_I by pairing iterated dual reflections against simple roots."""
    seq = admissible(w, tuple(I))
    roots = [w.beta(p) for p in seq]
    d = [1]
    for j in range(1, len(seq)):
        d.append(-coroot_pairing(w.rs, iterated_coroot(w.rs, roots[:j]), roots[j]))
    return CurveClass.from_sparse(w.m, seq, d)


def expand_repeated(w: Word, I: Iterable[int]) -> CurveClass:
    """Coefficients c_{i_j} for a label whose first two letters share a root.

    Returns the class sum_{j>=2} c_{i_j} L_{i_j} with c_{i_2} = -1 and
    c_{i_j} = <alpha^vee_{i_2...i_{j-1}}, alpha_{i_j}>.  This is the negative
    of ``expand(w, I[1:])`` and differs from ``expand(w, I)`` by
    L_{i_1} - L_{i_2}; it is kept for cross-checking only.
    """
    seq = admissible(w, tuple(I))
    if len(seq) < 2 or w.beta(seq[0]) != w.beta(seq[1]):
        raise ValidationError(f"{seq} does not start with two positions carrying the same root")
    roots = [w.beta(p) for p in seq]
    c = [-1]
    for j in range(2, len(seq)):
        c.append(coroot_pairing(w.rs, iterated_coroot(w.rs, roots[1:j]), roots[j]))
    return CurveClass.from_sparse(w.m, seq[1:], c)


def iter_expansions(w: Word, starts: Iterable[int] | None = None) -> Iterator[tuple[AdmissibleSeq, tuple[int, ...]]]:
    """Yield ``(I, d)`` for every nonempty admissible I, with d aligned to I.

    Labels come out in lexicographic order.  Extending a label never changes
    the coefficients already computed for it, so each label costs O(|I|).
    """
    table = pairing_table(w)
    m = w.m
    for s in range(1, m + 1) if starts is None else starts:
        check_position(w, s)
        stack: list[tuple[AdmissibleSeq, tuple[int, ...]]] = [((s,), (1,))]
        while stack:
            seq, d = stack.pop()
            yield seq, d
            for k in range(m, seq[-1], -1):
                row = table[k - 1]
                dk = checked(-sum(dj * row[ij - 1] for dj, ij in zip(d, seq)))
                stack.append((seq + (k,), d + (dk,)))
