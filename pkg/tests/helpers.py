"""Independent oracles and shared generators for the test suite.

Nothing here calls the recursions under test except where noted; the
closed forms are written out term by term.
"""

import itertools
import random

from hypothesis import strategies as st

from bsdhtoric.chow import expand_oracle
from bsdhtoric.rootsys import named_root_system
from bsdhtoric.word import make_word

SMALL_TYPES = [("A", 2), ("A", 3), ("B", 2), ("G", 2)]

# every named finite type of rank <= 6
TYPES_UP_TO_6 = (
    [("A", n) for n in range(1, 7)]
    + [("B", n) for n in range(2, 7)]
    + [("C", n) for n in range(2, 7)]
    + [("D", n) for n in range(3, 7)]
    + [("E", 6), ("F", 4), ("G", 2)]
)


def exhaustive_words(max_len, types=SMALL_TYPES):
    for fam, n in types:
        rs = named_root_system(fam, n)
        for m in range(1, max_len + 1):
            for roots in itertools.product(range(1, n + 1), repeat=m):
                yield make_word(rs, roots)


def random_word(rng, max_len, types=TYPES_UP_TO_6, min_len=1):
    fam, n = rng.choice(types)
    rs = named_root_system(fam, n)
    return make_word(rs, [rng.randint(1, n) for _ in range(rng.randint(min_len, max_len))])


def random_words(seed, count, max_len, types=TYPES_UP_TO_6, min_len=1):
    rng = random.Random(seed)
    return [random_word(rng, max_len, types, min_len) for _ in range(count)]


@st.composite
def words(draw, min_len=1, max_len=8, types=TYPES_UP_TO_6):
    fam, n = draw(st.sampled_from(types))
    rs = named_root_system(fam, n)
    roots = draw(st.lists(st.integers(1, n), min_size=min_len, max_size=max_len))
    return make_word(rs, roots)


@st.composite
def words_with_label(draw, min_len=1, max_len=8):
    w = draw(words(min_len=max(min_len, 1), max_len=max_len))
    positions = draw(st.sets(st.integers(1, w.m), min_size=1))
    return w, tuple(sorted(positions))


def all_labels(m):
    for k in range(1, m + 1):
        yield from itertools.combinations(range(1, m + 1), k)


# --- closed forms for five-element labels ----------------------------------


def _pp(w, seq):
    """(a, b) -> pairing between the a-th and b-th entries of seq, 1-based."""
    t = w.rs.cartan
    roots = [w.roots[p - 1] for p in seq]
    return lambda a, b: t[roots[b - 1] - 1][roots[a - 1] - 1]


def five_term_closed_form(w, seq):
    """Fully multiplied-out coefficients of a five-element label, written term by term."""
    assert len(seq) == 5
    p = _pp(w, seq)
    d1 = 1
    d2 = -p(2, 1)
    d3 = -p(3, 1) + p(3, 2) * p(2, 1)
    d4 = -p(4, 1) + p(4, 2) * p(2, 1) + p(4, 3) * p(3, 1) - p(4, 3) * p(3, 2) * p(2, 1)
    d5 = (
        -p(5, 1)
        + p(5, 2) * p(2, 1)
        + p(5, 3) * p(3, 1)
        + p(5, 4) * p(4, 1)
        - p(5, 3) * p(3, 2) * p(2, 1)
        - p(5, 4) * p(4, 2) * p(2, 1)
        - p(5, 4) * p(4, 3) * p(3, 1)
        + p(5, 4) * p(4, 3) * p(3, 2) * p(2, 1)
    )
    out = [0] * w.m
    for pos, d in zip(seq, (d1, d2, d3, d4, d5)):
        out[pos - 1] = d
    return tuple(out)


def five_term_repeated_closed_form(w, seq):
    """Specialisation when the first two entries carry the same root."""
    assert len(seq) == 5
    p = _pp(w, seq)
    c2 = -1
    c3 = p(3, 2)
    c4 = p(4, 2) - p(4, 3) * p(3, 2)
    c5 = p(5, 2) - p(5, 3) * p(3, 2) - p(5, 4) * p(4, 2) + p(5, 4) * p(4, 3) * p(3, 2)
    out = [0] * w.m
    for pos, c in zip(seq[1:], (c2, c3, c4, c5)):
        out[pos - 1] = c
    return tuple(out)


# --- inductive construction of the extremal basis --------------------------


def inductive_basis_label(w, j):
    """Grow L_j(w[r]) for r = j..m, switching to the non-Schubert section exactly
    when the Schubert-section copy has positive self-intersection.

    The self-intersection of the Schubert copy of L_I over level k equals minus
    the coefficient of L_k in L_{I k}; here it is read off ``expand_oracle``.
    """
    seq = (j,)
    for k in range(j + 1, w.m + 1):
        self_int = -expand_oracle(w, seq + (k,)).coeffs[k - 1]
        if self_int > 0:
            seq = seq + (k,)
    return seq


def staircase_word(rs, n):
    """1..n, 1..n-1, ..., 1,2, 1."""
    roots = [r for top in range(n, 0, -1) for r in range(1, top + 1)]
    return make_word(rs, roots)


def staircase_mori_positions(n):
    out, total = [], 0
    for block in range(n, 0, -1):
        total += block
        out.append(total)
    return out
