"""Words of simple reflections and position-level Cartan pairings.

Positions in a word are 1-based.  A word need not be reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ValidationError
from .rootsys import RootSystem, pairing

# Strictly increasing 1-based positions (i_1 < ... < i_r) in a word.
AdmissibleSeq = tuple[int, ...]


@dataclass(frozen=True)
class Word:
    rs: RootSystem
    roots: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)

    def beta(self, p: int) -> int:
        """Simple-root index carried by position ``p``."""
        return self.roots[check_position(self, p) - 1]

    def __str__(self):
        return f"{self.rs}:({','.join(map(str, self.roots))})"


def make_word(rs: RootSystem, roots: Iterable[int]) -> Word:
    roots = tuple(roots)
    for k, j in enumerate(roots, 1):
        if not isinstance(j, int) or isinstance(j, bool) or not 1 <= j <= rs.rank:
            raise ValidationError(f"word letter {j!r} at position {k} out of range 1..{rs.rank}")
    return Word(rs, roots)


def check_position(w: Word, p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= w.m:
        raise ValidationError(f"position {p!r} out of range 1..{w.m}")
    return p


def admissible(w: Word, positions: Sequence[int], allow_empty: bool = False) -> AdmissibleSeq:
    """Validate ``positions`` as an m-admissible sequence for ``w``."""
    seq = tuple(positions)
    if not seq and not allow_empty:
        raise ValidationError("admissible sequence must be nonempty")
    for p in seq:
        check_position(w, p)
    if any(a >= b for a, b in zip(seq, seq[1:])):
        raise ValidationError(f"positions {seq} are not strictly increasing")
    return seq


def truncate(w: Word, r: int, side: str = "prefix") -> Word:
    """``w[r]`` (first r letters) or ``[r]w`` (letters r+1..m), renumbered from 1."""
    if not isinstance(r, int) or not 0 <= r <= w.m:
        raise ValidationError(f"truncation length {r!r} out of range 0..{w.m}")
    if side == "prefix":
        return Word(w.rs, w.roots[:r])
    if side == "suffix":
        return Word(w.rs, w.roots[r:])
    raise ValidationError(f"side must be 'prefix' or 'suffix', got {side!r}")


def pos_pairing(w: Word, j_pos: int, r_pos: int) -> int:
    """The integer (j, r) = <alpha_{beta(j)}, alpha_{beta(r)}^vee>."""
    return pairing(w.rs, w.beta(j_pos), w.beta(r_pos))


def label(positions: Sequence[int]) -> str:
    """Text label in the L_{135} style; commas appear once a position exceeds 9."""
    sep = "," if any(p > 9 for p in positions) else ""
    return "L_{" + sep.join(map(str, positions)) + "}"


@lru_cache(maxsize=4096)
def pairing_table(w: Word) -> tuple[tuple[int, ...], ...]:
    """``table[j-1][r-1] == pos_pairing(w, j, r)`` for all positions, unchecked lookup."""
    c = w.rs.cartan
    return tuple(tuple(c[br - 1][bj - 1] for br in w.roots) for bj in w.roots)
