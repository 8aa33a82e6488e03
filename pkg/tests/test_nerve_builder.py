import networkx as nx
import pytest
from hypothesis import given, settings

from analysis.classify import is_finite
from analysis.nerve_builder import finite_subsets, nerve, nerve_of_racg, racg_matrix
from analysis.oracles import small_graphs
from models.coxeter_matrix import CoxeterMatrix
from tests.strategies import coxeter_matrices


def test_pentagon_nerve_is_a_cycle(family_nerve):
    L = family_nerve("cycle", 5)
    assert L.complex.dimension == 1
    assert len(L.complex.edges()) == 5
    assert L.is_right_angled()


def test_affine_triangle_nerve_is_hollow():
    M = CoxeterMatrix("abc", {frozenset(p): 3 for p in ("ab", "bc", "ac")})
    L = nerve(M)
    assert set(L.complex.maximal_faces) == {frozenset("ab"), frozenset("bc"), frozenset("ac")}
    assert L.label("a", "b") == 3


def test_finite_triangle_nerve_is_filled():
    M = CoxeterMatrix("abc", {frozenset("ab"): 3, frozenset("bc"): 5, frozenset("ac"): 2})
    assert nerve(M).complex.maximal_faces == (frozenset("abc"),)


def test_nerve_remembers_its_matrix(family_nerve):
    L = family_nerve("antiprism", 5)
    assert L.origin is not None
    assert L.vertices == L.origin.generators


def test_all_infinite_system_is_discrete():
    L = nerve(CoxeterMatrix("abc"))
    assert L.complex.dimension == 0
    assert len(L.complex.maximal_faces) == 3


@settings(max_examples=60, deadline=None)
@given(coxeter_matrices(max_generators=5))
def test_faces_are_exactly_the_finite_subsets(M):
    faces = set(finite_subsets(M))
    L = nerve(M)
    assert set(L.complex.faces()) == faces
    assert all(is_finite(M, face) for face in faces)
    # closed under subsets and maximal by construction
    for face in faces:
        for t in M.generators:
            if t not in face and face | {t} not in faces:
                assert not is_finite(M, face | {t})


@pytest.mark.parametrize("G", list(small_graphs(5)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_flag_nerve_matches_general_nerve(G):
    assert nerve_of_racg(G) == nerve(racg_matrix(G))


def test_racg_rejects_loops():
    G = nx.Graph([(0, 0)])
    with pytest.raises(ValueError):
        nerve_of_racg(G)
