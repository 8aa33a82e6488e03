from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analysis.metric import (
    double_along,
    has_size_ge_half_pi,
    is_automorphism,
    is_metrically_flag,
    spherical_structure,
    swap_involution,
)
from analysis.nerve_builder import nerve
from models.coxeter_matrix import CoxeterMatrix
from models.labelled_nerve import LabelledNerve
from models.spherical_complex import SphericalComplex
from tests.strategies import coxeter_matrices
from utils.errors import ComplexError


def lengths(K, value):
    return SphericalComplex(K, {edge: value for edge in K.edges()})


def test_edge_lengths():
    M = CoxeterMatrix("abcd", {frozenset("ab"): 2, frozenset("bc"): 3, frozenset("cd"): 6})
    X = spherical_structure(nerve(M))
    assert X.length("a", "b") == Fraction(1, 2)
    assert X.length("b", "c") == Fraction(2, 3)
    assert X.length("c", "d") == Fraction(5, 6)
    assert has_size_ge_half_pi(X)


def test_hollow_right_angled_triangle_is_not_flag(complex_of):
    flag, clique = is_metrically_flag(lengths(complex_of("ab", "bc", "ca"), Fraction(1, 2)))
    assert not flag
    assert clique == ("a", "b", "c")


def test_hollow_affine_triangle_is_flag(complex_of):
    assert is_metrically_flag(lengths(complex_of("ab", "bc", "ca"), Fraction(2, 3))) == (True, None)


def test_filled_affine_triangle_is_not_flag(complex_of):
    assert not is_metrically_flag(lengths(complex_of("abc"), Fraction(2, 3)))[0]


def test_short_edges_are_rejected(complex_of):
    with pytest.raises(ComplexError):
        is_metrically_flag(lengths(complex_of("ab"), Fraction(1, 3)))


@settings(max_examples=50, deadline=None)
@given(coxeter_matrices(max_generators=6))
def test_nerves_are_metrically_flag(M):
    assert is_metrically_flag(spherical_structure(nerve(M))) == (True, None)


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(coxeter_matrices(max_generators=7))
def test_nerves_on_seven_generators_are_metrically_flag(M):
    S = spherical_structure(nerve(M))
    assert has_size_ge_half_pi(S)
    assert is_metrically_flag(S) == (True, None)


def test_doubling_a_path_gives_a_square(complex_of):
    K = complex_of("ab", "bc")
    doubled = double_along(LabelledNerve(K, {e: 2 for e in K.edges()}), {"a", "c"})
    assert doubled.vertices == ("a", "b", "c", "b'")
    assert set(doubled.complex.maximal_faces) == {
        frozenset(("a", "b")), frozenset(("b", "c")), frozenset(("a", "b'")), frozenset(("b'", "c")),
    }


def test_doubling_avoids_name_clashes(complex_of):
    K = complex_of("ab", ("a", "b'"))
    doubled = double_along(LabelledNerve(K, {e: 2 for e in K.edges()}), {"a"})
    assert len(set(doubled.vertices)) == 5


def test_doubling_a_triangle_along_an_edge(complex_of):
    X = lengths(complex_of("abc"), Fraction(1, 2))
    doubled = double_along(X, {"a", "b"})
    assert set(doubled.complex.maximal_faces) == {frozenset("abc"), frozenset(("a", "b", "c'"))}
    assert doubled.length("a", "c'") == Fraction(1, 2)


@st.composite
def nerves_with_subsets(draw, max_generators=5):
    M = draw(coxeter_matrices(max_generators=max_generators))
    K = draw(st.sets(st.sampled_from(M.generators)))
    return nerve(M), K


@settings(max_examples=40, deadline=None)
@given(nerves_with_subsets())
def test_doubling_preserves_metric_flagness(case):
    L, K = case
    doubled = double_along(L, K)
    assert is_metrically_flag(spherical_structure(doubled)) == (True, None)


@settings(max_examples=40, deadline=None)
@given(nerves_with_subsets())
def test_swap_is_an_automorphism(case):
    L, K = case
    doubled = double_along(L, K)
    mapping = swap_involution(L, K)
    assert is_automorphism(doubled, mapping)
    assert {v for v in mapping if mapping[v] == v} == set(K)


@pytest.mark.slow
@settings(max_examples=100, deadline=None)
@given(nerves_with_subsets(max_generators=7))
def test_doubling_larger_nerves(case):
    L, K = case
    doubled = double_along(L, K)
    assert is_metrically_flag(spherical_structure(doubled)) == (True, None)
    assert is_automorphism(doubled, swap_involution(L, K))


def test_non_automorphism_is_detected(complex_of):
    K = complex_of("ab", "bc")
    L = LabelledNerve(K, {frozenset("ab"): 2, frozenset("bc"): 3})
    assert not is_automorphism(L, {"a": "c", "b": "b", "c": "a"})
    assert is_automorphism(L, {"a": "a", "b": "b", "c": "c"})
