import pytest

from analysis.complexes import build_complex, delete_vertices
from analysis.nerve_builder import nerve, nerve_of_racg
from analysis.oracles import curated_complexes, small_graphs
from analysis.separation import separating_nonadjacent_pairs, separating_suspensions
from analysis.topology_forms import (
    NerveKind,
    euler_characteristic,
    form_witness,
    is_circle_triangulation,
    is_labelled_wheel,
    is_simplex,
    is_sphere_triangulation,
    nerve_kind,
    reduced_cohomology_ranks,
    torsion_suspects,
    vcd,
    wheel_apex,
)
from models.coxeter_matrix import CoxeterMatrix
from models.witness import WitnessKind
from utils.errors import DimensionGuardError
from utils.families import make_family

CURATED = {name: K for name, K, _ in curated_complexes()}


def test_simplex(complex_of):
    assert is_simplex(complex_of("abc"))
    assert is_simplex(complex_of("a"))
    assert not is_simplex(complex_of("a", "b"))


def test_circle(complex_of, family_nerve):
    assert is_circle_triangulation(family_nerve("cycle", 5))
    assert is_circle_triangulation(complex_of("ab", "bc", "ca"))
    assert not is_circle_triangulation(complex_of("abc"))
    assert not is_circle_triangulation(complex_of("ab", "bc"))


@pytest.mark.parametrize("name, sphere", [
    ("tetrahedron boundary", True),
    ("octahedron", True),
    ("bipyramid over 5-cycle", True),
    ("octahedron minus a face", False),
    ("seven-vertex torus", False),
    ("six-vertex projective plane", False),
    ("two tetrahedron boundaries", False),
])
def test_sphere(name, sphere):
    assert is_sphere_triangulation(CURATED[name]) is sphere


def test_labelled_wheel(family_nerve):
    L = family_nerve("wheel", 5)
    assert wheel_apex(L) == "c"
    assert not is_labelled_wheel(family_nerve("wheel", 3))
    assert not is_labelled_wheel(family_nerve("wheel", 5, [("c", "v1", 3)]))
    assert not is_labelled_wheel(family_nerve("cycle", 5))


def test_form_witness(family_nerve):
    assert form_witness(family_nerve("simplex", 3)).kind is WitnessKind.SIMPLEX_NERVE
    assert form_witness(family_nerve("cycle", 6)).kind is WitnessKind.CIRCLE_TRIANGULATION
    wheel = form_witness(family_nerve("wheel", 6))
    assert wheel.kind is WitnessKind.LABELLED_WHEEL
    assert wheel.apex == "c"
    assert form_witness(family_nerve("octahedron")).kind is WitnessKind.SPHERE_TRIANGULATION
    # an unlabelled cone is not checked for the wheel form
    assert form_witness(family_nerve("wheel", 6).complex) is None
    assert form_witness(family_nerve("antiprism", 5)) is None


def test_cohomology_ranks(complex_of, family_nerve):
    assert reduced_cohomology_ranks(family_nerve("cycle", 5)) == (0, 0, 1, 0)
    assert reduced_cohomology_ranks(complex_of("a", "b")) == (0, 1, 0, 0)
    assert reduced_cohomology_ranks(family_nerve("octahedron")) == (0, 0, 0, 1)
    assert reduced_cohomology_ranks(complex_of("abc")) == (0, 0, 0, 0)
    assert reduced_cohomology_ranks(family_nerve("antiprism", 5)) == (0, 0, 1, 0)


def test_cohomology_of_the_empty_complex(complex_of):
    K = complex_of("ab")
    assert reduced_cohomology_ranks(delete_vertices(K, K.vertices)) == (1, 0, 0, 0)


def test_projective_plane_has_two_torsion():
    K = CURATED["six-vertex projective plane"]
    assert reduced_cohomology_ranks(K) == (0, 0, 0, 0)
    assert reduced_cohomology_ranks(K, modulus=2) == (0, 0, 1, 1)
    assert torsion_suspects(K)[0] == ()


def test_dimension_guard():
    with pytest.raises(DimensionGuardError):
        reduced_cohomology_ranks(CURATED["solid tetrahedron"])


@pytest.mark.parametrize("name, n, expected", [
    ("cycle", 5, 2),
    ("cycle", 8, 2),
    ("wheel", 5, 2),
    ("antiprism", 5, 2),
    ("octahedron", None, 3),
    ("simplex", 3, 0),
])
def test_vcd(name, n, expected):
    M = make_family(name, n)
    assert vcd(M, nerve(M)) == expected


def test_vcd_of_small_groups():
    free_product = CoxeterMatrix("ab")
    assert vcd(free_product, nerve(free_product)) == 1
    triangle = CoxeterMatrix("abc", {frozenset(p): 3 for p in ("ab", "bc", "ac")})
    assert vcd(triangle, nerve(triangle)) == 2


@pytest.mark.parametrize("name, kind", [
    ("5-cycle", NerveKind.GRAPH),
    ("octahedron", NerveKind.SPHERE),
    ("cone over 5-cycle", NerveKind.DISC),
    ("4-gonal annulus", NerveKind.PLANAR_SURFACE),
    ("moebius band", NerveKind.OTHER),
    ("seven-vertex torus", NerveKind.OTHER),
    ("two-page book", NerveKind.DISC),
])
def test_nerve_kind(name, kind):
    assert nerve_kind(CURATED[name]) is kind


def test_euler_characteristic():
    assert euler_characteristic(CURATED["seven-vertex torus"]) == 0
    assert euler_characteristic(CURATED["six-vertex projective plane"]) == 1
    assert euler_characteristic(build_complex([("a", "b", "c")])) == 1


@pytest.mark.parametrize("G", list(small_graphs(6)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_unseparable_flag_nerves_avoid_circles_and_wheels(G):
    L = nerve_of_racg(G)
    if separating_nonadjacent_pairs(L) or separating_suspensions(L):
        return
    assert not is_circle_triangulation(L)
    assert not is_labelled_wheel(L)
