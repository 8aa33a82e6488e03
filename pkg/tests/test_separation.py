from itertools import combinations

import pytest

from analysis.complexes import components, delete_vertices
from analysis.nerve_builder import nerve, nerve_of_racg
from analysis.oracles import small_graphs
from analysis.separation import (
    is_unseparable,
    labelled_suspensions,
    separating_nonadjacent_pairs,
    separating_simplices,
    separating_suspensions,
    verify_separation_witness,
)
from models.coxeter_matrix import CoxeterMatrix
from models.labelled_nerve import LabelledNerve, LabelledSuspensionWitness
from models.witness import WitnessKind
from tests.strategies import wheel_graph_system


def removed_sets(witnesses):
    return [w.removed for w in witnesses]


def test_path_has_a_cut_vertex(racg):
    L = racg("a-b b-c")
    assert removed_sets(separating_simplices(L)) == [("b",)]
    assert is_unseparable(L) == (False, separating_simplices(L)[0])


def test_pentagon_pairs(family_nerve):
    L = family_nerve("cycle", 5)
    assert separating_simplices(L) == []
    assert removed_sets(separating_nonadjacent_pairs(L)) == [
        ("v1", "v3"), ("v1", "v4"), ("v2", "v4"), ("v2", "v5"), ("v3", "v5"),
    ]
    unseparable, witness = is_unseparable(L)
    assert not unseparable
    assert witness.kind is WitnessKind.NONADJACENT_PAIR
    assert witness.components == (("v2",), ("v4", "v5"))


def test_two_triangles_share_a_separating_edge(complex_of):
    K = complex_of("abc", "abd")
    L = LabelledNerve(K, {e: 2 for e in K.edges()})
    assert removed_sets(separating_simplices(L)) == [("a", "b")]


def test_square_suspensions(racg):
    L = racg("a-b b-c c-d d-a")
    assert labelled_suspensions(L) == [
        LabelledSuspensionWitness(("a", "c"), ("b",)),
        LabelledSuspensionWitness(("a", "c"), ("d",)),
        LabelledSuspensionWitness(("b", "d"), ("a",)),
        LabelledSuspensionWitness(("b", "d"), ("c",)),
    ]


def test_suspension_needs_right_angles_at_the_base():
    M = CoxeterMatrix("abcd", {frozenset("ab"): 3, frozenset("bc"): 2, frozenset("cd"): 2, frozenset("da"): 2})
    assert labelled_suspensions(nerve(M)) == [
        LabelledSuspensionWitness(("a", "c"), ("d",)),
        LabelledSuspensionWitness(("b", "d"), ("c",)),
    ]


def test_octahedron_suspensions(family_nerve):
    # three pole pairs, each with the 4 edges and 4 vertices of its equator
    assert len(labelled_suspensions(family_nerve("octahedron"))) == 24


def test_disconnected_nerve():
    L = nerve(CoxeterMatrix("ab"))
    unseparable, witness = is_unseparable(L)
    assert not unseparable
    assert witness.kind is WitnessKind.DISCONNECTED
    assert witness.components == (("a",), ("b",))
    assert verify_separation_witness(L, witness)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_antiprisms_are_unseparable(family_nerve, n):
    assert is_unseparable(family_nerve("antiprism", n)) == (True, None)


def test_wheel_graph_with_two_commuting_spokes():
    assert is_unseparable(nerve(wheel_graph_system())) == (True, None)
    L = nerve(wheel_graph_system(spokes_labelled_two=("v1", "v5")))
    unseparable, witness = is_unseparable(L)
    assert not unseparable
    assert witness.kind is WitnessKind.LABELLED_SUSPENSION
    assert witness.removed == ("x", "v1", "v5")
    assert witness.suspension.poles == ("v1", "v5")
    assert witness.suspension.base == ("x",)
    assert witness.components == (("v2", "v3", "v4"), ("v6", "v7", "v8", "v9"))


def test_pairs_and_suspensions_do_not_overlap(family_nerve):
    L = family_nerve("wheel", 6)
    assert all(len(w.removed) == 2 for w in separating_nonadjacent_pairs(L))
    assert all(len(w.removed) >= 3 for w in separating_suspensions(L))


def test_verify_rejects_tampered_witness(family_nerve):
    L = family_nerve("cycle", 6)
    witness = separating_nonadjacent_pairs(L)[0]
    assert verify_separation_witness(L, witness)
    witness.components = witness.components[:1]
    assert not verify_separation_witness(L, witness)


def brute_force_unseparable(L):
    """Check every vertex subset against the three separation shapes."""
    K = L.complex
    if len(components(K)) > 1:
        return False
    vertices = K.vertices
    for size in range(1, len(vertices) + 1):
        for subset in combinations(vertices, size):
            rest = delete_vertices(K, subset)
            if rest.is_empty() or len(components(rest)) < 2:
                continue
            if K.is_face(subset):
                return False
            if size == 2:
                return False
            for s, t in combinations(subset, 2):
                base = set(subset) - {s, t}
                if (
                    not K.is_face((s, t))
                    and K.is_face(base | {s})
                    and K.is_face(base | {t})
                    and all(L.label(p, x) == 2 for p in (s, t) for x in base)
                ):
                    return False
    return True


@pytest.mark.parametrize("G", list(small_graphs(6)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_matches_brute_force(G):
    L = nerve_of_racg(G)
    unseparable, witness = is_unseparable(L)
    assert unseparable == brute_force_unseparable(L)
    if witness is not None:
        assert verify_separation_witness(L, witness)
