import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsdhtoric.chow import CurveClass, schubert_line
from bsdhtoric.errors import ValidationError
from bsdhtoric.extremal import extremal_basis
from bsdhtoric.intersect import (
    DivisorClass,
    boundary_dot_schubert,
    bsdh_ample,
    canonical_class,
    canonical_dot_schubert,
    divisor_dot_curve,
    is_fano,
    is_mori_ray,
    lt_dot_schubert,
    lt_to_boundary,
    mori_failure,
    mori_rays,
    ray_intersections,
    schubert_dots,
    to_boundary,
    to_lt,
    toric_ample,
)
from bsdhtoric.rootsys import named_root_system
from bsdhtoric.word import make_word, pos_pairing, truncate

from helpers import words

A2 = named_root_system("A", 2)
A3 = named_root_system("A", 3)
W121 = make_word(A2, (1, 2, 1))


def test_divisor_class_validation():
    with pytest.raises(ValidationError):
        DivisorClass("LT")
    with pytest.raises(ValidationError):
        DivisorClass("boundary", schubert=(1, 2), nonschubert=(1,))
    with pytest.raises(ValidationError):
        DivisorClass("weird", lt_coeffs=(1,))
    with pytest.raises(ValidationError):
        DivisorClass.lt((1.5, 2))
    d = DivisorClass.boundary((1, 2))
    assert d.nonschubert == (0, 0) and d.m == 2
    assert (-d).schubert == (-1, -2)


def test_lt_dot_schubert_examples():
    assert lt_dot_schubert(W121, 2, 2) == 1
    assert lt_dot_schubert(W121, 1, 3) == 0
    assert lt_dot_schubert(W121, 3, 1) == 1
    assert lt_dot_schubert(W121, 3, 2) == 0


def test_boundary_dot_schubert_examples():
    for which in ("schubert", "nonschubert"):
        assert boundary_dot_schubert(W121, 2, 2, which) == 1
        assert boundary_dot_schubert(W121, 1, 2, which) == 0
    assert boundary_dot_schubert(W121, 3, 1) == 2
    assert boundary_dot_schubert(W121, 3, 1, "nonschubert") == 0
    with pytest.raises(ValidationError):
        boundary_dot_schubert(W121, 3, 1, "other")


def test_divisor_dot_curve_examples():
    d = DivisorClass.boundary((0, 1, 1))
    assert divisor_dot_curve(W121, d, schubert_line(W121, 1)) == 1
    zero = DivisorClass.boundary((0, 0, 0))
    assert divisor_dot_curve(W121, zero, CurveClass((4, -1, 7))) == 0
    lt3 = DivisorClass.lt((0, 0, 1))
    assert [divisor_dot_curve(W121, lt3, schubert_line(W121, r)) for r in (1, 2, 3)] == [1, 0, 1]


def test_canonical_examples():
    k1 = canonical_class(make_word(A2, (1,)))
    assert k1.schubert == (-1,) and k1.nonschubert == (-1,)
    assert canonical_dot_schubert(W121, 3) == -2
    assert canonical_dot_schubert(W121, 2) == -1
    assert canonical_dot_schubert(W121, 1) == -3


def test_lt_to_boundary_examples():
    assert lt_to_boundary(W121, 1) == (1, 0, 0)
    assert lt_to_boundary(W121, 3) == (0, 1, 1)
    assert to_boundary(W121, DivisorClass.lt((0, 0, 1))) == DivisorClass.boundary((0, 1, 1))


def test_to_lt():
    assert to_lt(W121, DivisorClass.boundary((0, 1, 1))) == DivisorClass.lt((0, 0, 1))
    assert to_lt(W121, DivisorClass.boundary((0, 1, 1), (1, 0, 0))) is None


def test_mori_examples():
    assert is_mori_ray(W121, 3)
    assert not is_mori_ray(W121, 1)
    assert is_mori_ray(W121, 2)
    assert mori_failure(W121, 1) == "L_1 not extremal ((3,1)=2)"
    assert mori_rays(make_word(A3, (1, 2, 3, 1, 2, 1))) == [3, 5, 6]
    assert mori_rays(make_word(A2, (2,))) == [1]
    assert mori_rays(W121) == [2, 3]
    with pytest.raises(ValidationError):
        mori_rays(make_word(A2, ()))


def test_mori_failure_canonical_reason():
    # G2: (2,1) = -3, extremal but K.L_1 = 1
    w = make_word(named_root_system("G", 2), (1, 2))
    assert mori_failure(w, 1) == "L_1 extremal but K.L_1=1 >= 0 ((2,1)=-3)"


def test_fano_examples():
    assert is_fano(make_word(A2, (1,)))
    assert is_fano(make_word(A2, (1, 2)))
    assert not is_fano(W121)
    with pytest.raises(ValidationError):
        is_fano(make_word(A2, ()))


def test_toric_ample_examples():
    assert toric_ample(W121, DivisorClass.boundary((3, 2, 1)))
    assert not toric_ample(W121, DivisorClass.boundary((1, 2, 1)))
    assert not toric_ample(W121, DivisorClass.boundary((0, 0, 0)))
    assert ray_intersections(W121, DivisorClass.boundary((5, 3, 1))) == [2, 2, 1]


def test_bsdh_ample_examples():
    assert bsdh_ample(DivisorClass.lt((1, 1, 1)))
    assert not bsdh_ample(DivisorClass.lt((1, 0, 1)))
    assert not bsdh_ample(DivisorClass.lt((1, 1, -1)))
    with pytest.raises(ValidationError):
        bsdh_ample(DivisorClass.boundary((1, 1, 1)))


def test_length_mismatch():
    with pytest.raises(ValidationError):
        schubert_dots(W121, DivisorClass.lt((1, 1)))
    with pytest.raises(ValidationError):
        divisor_dot_curve(W121, DivisorClass.lt((1, 1, 1)), CurveClass((1,)))


@settings(max_examples=200)
@given(words(min_len=1, max_len=10))
def test_canonical_formula(w):
    K = canonical_class(w)
    for r in range(1, w.m + 1):
        assert canonical_dot_schubert(w, r) == divisor_dot_curve(w, K, schubert_line(w, r))


@settings(max_examples=200)
@given(words(min_len=1, max_len=10))
def test_lt_round_trip(w):
    for j in range(1, w.m + 1):
        a = lt_to_boundary(w, j)
        assert all(x == 0 for x in a[j:])
        for r in range(1, w.m + 1):
            assert sum(a[i - 1] * boundary_dot_schubert(w, i, r) for i in range(1, w.m + 1)) == lt_dot_schubert(w, j, r)


@settings(max_examples=200)
@given(words(min_len=1, max_len=10), st.data())
def test_to_lt_inverts_to_boundary(w, data):
    coeffs = data.draw(st.lists(st.integers(-5, 5), min_size=w.m, max_size=w.m))
    D = DivisorClass.lt(coeffs)
    B = to_boundary(w, D)
    assert to_lt(w, B) == D
    assert schubert_dots(w, D) == schubert_dots(w, B)


@settings(max_examples=200)
@given(words(min_len=1, max_len=10))
def test_mori_consistency(w):
    for r in range(1, w.m + 1):
        later = [pos_pairing(w, j, r) for j in range(r + 1, w.m + 1)]
        other = all(v <= 0 for v in later) and canonical_dot_schubert(w, r) < 0
        assert is_mori_ray(w, r) == other


@settings(max_examples=200)
@given(words(min_len=1, max_len=10))
def test_non_mori_persists_on_longer_prefixes(w):
    for r in range(1, w.m + 1):
        verdicts = [is_mori_ray(truncate(w, p), r) for p in range(r, w.m + 1)]
        # once False, stays False
        assert verdicts == sorted(verdicts, reverse=True)


def test_a2_chamber_small():
    for a in itertools.product(range(-1, 4), repeat=3):
        assert toric_ample(W121, DivisorClass.boundary(a)) == (a[0] > a[1] > a[2] > 0)


@settings(max_examples=100)
@given(words(min_len=1, max_len=8), st.data())
def test_nonschubert_part_bilinear(w, data):
    a = data.draw(st.lists(st.integers(-3, 3), min_size=w.m, max_size=w.m))
    b = data.draw(st.lists(st.integers(-3, 3), min_size=w.m, max_size=w.m))
    dots = schubert_dots(w, DivisorClass.boundary(a, b))
    base = schubert_dots(w, DivisorClass.boundary(a))
    assert [x - y for x, y in zip(dots, base)] == b


@settings(max_examples=100)
@given(words(min_len=1, max_len=8))
def test_anticanonical_on_rays_matches_fano(w):
    # Fano iff -K is positive on every extremal ray
    rays = ray_intersections(w, -canonical_class(w), extremal_basis(w))
    assert is_fano(w) == all(v > 0 for v in rays)
