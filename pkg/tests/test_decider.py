import networkx as nx
import pytest

from analysis.decider import classify_boundary, implementation_for, theorem1_racg
from analysis.nerve_builder import nerve_of_racg
from analysis.oracles import small_graphs
from analysis.planarity import planarity_oracle_small
from implementations import get_implementation, list_implementations
from models.coxeter_matrix import CoxeterMatrix
from models.verdict import Boundary, Mode
from models.witness import WitnessKind
from tests.strategies import wheel_graph_system
from utils.errors import RightAngledRequiredError
from utils.families import make_family
from utils.report import emit_report


def classify(name, n=None, overrides=(), mode=Mode.THEOREM2):
    return classify_boundary(make_family(name, n, overrides), mode)


def kinds(verdict):
    return [w.kind for w in verdict.witnesses]


def test_registry():
    assert list_implementations() == ["theorem1", "theorem2", "conjectural"]
    assert implementation_for(Mode.CONJECTURAL) is get_implementation("conjectural")
    assert implementation_for("THEOREM1").mode is Mode.THEOREM1


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_cycles_have_circle_boundary(n):
    verdict = classify("cycle", n)
    assert verdict.boundary is Boundary.CIRCLE
    assert kinds(verdict) == [WitnessKind.CIRCLE_TRIANGULATION]
    assert verdict.diagnostics.circle_tri is True
    assert verdict.diagnostics.vcd == 2
    assert verdict.diagnostics.ends == 1


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9])
def test_wheels_have_circle_boundary(n):
    verdict = classify("wheel", n)
    assert verdict.boundary is Boundary.CIRCLE
    assert kinds(verdict) == [WitnessKind.LABELLED_WHEEL]
    assert verdict.witnesses[0].apex == "c"
    assert verdict.diagnostics.wheel is True


@pytest.mark.parametrize("name", ["cycle", "wheel"])
def test_square_based_forms_are_not_hyperbolic(name):
    verdict = classify(name, 4)
    assert verdict.boundary is Boundary.OUT_OF_SCOPE
    assert kinds(verdict) == [WitnessKind.EMPTY_SQUARE]
    assert verdict.witnesses[0].parts == (("v1", "v2", "v3", "v4"),)
    assert verdict.diagnostics.hyperbolic is False
    assert "W is not word-hyperbolic" in verdict.notes


@pytest.mark.parametrize("n", [5, 6])
def test_antiprisms_are_carpets(n):
    verdict = classify("antiprism", n)
    assert verdict.boundary is Boundary.SIERPINSKI_CARPET
    assert verdict.witnesses == []
    d = verdict.diagnostics
    assert (d.hyperbolic, d.nerve_planar, d.unseparable, d.boundary_planar) == (True, True, True, True)
    assert (d.vcd, d.dim_one, d.ends, d.connected_1ended) == (2, True, 1, True)
    assert (d.wheel, d.simplex, d.circle_tri, d.sphere_tri) == (False, False, False, False)
    assert "nerve kind: PLANAR_SURFACE" in verdict.notes


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_large_antiprisms_are_carpets(n):
    assert classify("antiprism", n).is_carpet


def test_antiprism_with_a_braid_relation_is_a_carpet():
    assert classify("antiprism", 5, [("t1", "t2", 3)]).is_carpet


def test_octahedron_has_sphere_boundary():
    verdict = classify("octahedron")
    assert verdict.boundary is Boundary.SPHERE
    assert kinds(verdict) == [WitnessKind.SPHERE_TRIANGULATION, WitnessKind.EMPTY_SQUARE]
    assert verdict.diagnostics.vcd == 3
    assert verdict.diagnostics.hyperbolic is False
    assert "W is not word-hyperbolic" in verdict.notes
    assert not verdict.conjectural


@pytest.mark.parametrize("n", [1, 2, 3])
def test_finite_groups_have_empty_boundary(n):
    verdict = classify("simplex", n)
    assert verdict.boundary is Boundary.EMPTY
    assert kinds(verdict) == [WitnessKind.SIMPLEX_NERVE]
    assert (verdict.diagnostics.ends, verdict.diagnostics.vcd) == (0, 0)


def test_nonplanar_nerve_is_out_of_scope():
    # K3,3 as a right-angled system
    M = CoxeterMatrix.right_angled("abcxyz", [(a, b) for a in "abc" for b in "xyz"])
    verdict = classify_boundary(M)
    assert verdict.boundary is Boundary.OUT_OF_SCOPE
    assert kinds(verdict) == [WitnessKind.NONPLANAR]
    assert verdict.diagnostics.nerve_planar is False
    assert "nonplanar nerve" in verdict.notes


def test_path_has_a_separating_vertex():
    verdict = theorem1_racg(nx.path_graph(3))
    assert verdict.boundary is Boundary.NOT_CARPET
    assert verdict.mode is Mode.THEOREM1
    assert verdict.witnesses[0].kind is WitnessKind.SIMPLEX
    assert verdict.witnesses[0].removed == ("1",)
    assert verdict.diagnostics.ends == 2


def test_infinite_dihedral_group_is_two_ended():
    verdict = classify_boundary(CoxeterMatrix("ab"))
    assert verdict.boundary is Boundary.NOT_CARPET
    assert kinds(verdict) == [WitnessKind.DISCONNECTED]
    assert verdict.diagnostics.ends == 2
    assert verdict.diagnostics.vcd == 1


def test_wheel_graph_with_nonright_labels():
    assert classify_boundary(wheel_graph_system()).is_carpet
    verdict = classify_boundary(wheel_graph_system(spokes_labelled_two=("v1", "v5")))
    assert verdict.boundary is Boundary.NOT_CARPET
    witness = verdict.witnesses[0]
    assert witness.kind is WitnessKind.LABELLED_SUSPENSION
    assert witness.suspension.poles == ("v1", "v5")
    assert witness.suspension.base == ("x",)


def test_theorem1_rejects_other_labels():
    with pytest.raises(RightAngledRequiredError):
        classify_boundary(wheel_graph_system(), Mode.THEOREM1)


class TestConjecturalMode:
    def test_square_continues_past_hyperbolicity(self):
        verdict = classify("cycle", 4, mode=Mode.CONJECTURAL)
        assert verdict.boundary is Boundary.CIRCLE
        assert verdict.conjectural
        assert kinds(verdict) == [WitnessKind.CIRCLE_TRIANGULATION, WitnessKind.EMPTY_SQUARE]
        assert "conjectural: W is not word-hyperbolic" in verdict.notes

    def test_octahedron_is_marked_conjectural(self):
        verdict = classify("octahedron", mode=Mode.CONJECTURAL)
        assert verdict.boundary is Boundary.SPHERE
        assert verdict.conjectural

    def test_hyperbolic_groups_are_not_marked(self):
        verdict = classify("antiprism", 5, mode=Mode.CONJECTURAL)
        assert verdict.is_carpet
        assert not verdict.conjectural

    def test_square_with_a_pendant_vertex(self):
        edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("d", "e")]
        verdict = classify_boundary(CoxeterMatrix.right_angled("abcde", edges), Mode.CONJECTURAL)
        assert verdict.boundary is Boundary.NOT_CARPET
        assert verdict.conjectural
        assert kinds(verdict) == [WitnessKind.SIMPLEX, WitnessKind.EMPTY_SQUARE]
        assert verdict.witnesses[0].removed == ("a", "d")
        assert verdict.witnesses[1].parts == (("a", "b", "c", "d"),)


@pytest.mark.parametrize("G", list(small_graphs(5)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_procedures_agree_on_right_angled_systems(G):
    first = theorem1_racg(G).to_dict()
    M = CoxeterMatrix.right_angled([str(v) for v in G.nodes], [(str(u), str(v)) for u, v in G.edges])
    second = classify_boundary(M, Mode.THEOREM2).to_dict()
    first.pop("mode")
    second.pop("mode")
    assert first == second


@pytest.mark.parametrize("G", list(small_graphs(5)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_carpet_verdicts_carry_their_criteria(G):
    verdict = theorem1_racg(G)
    d = verdict.diagnostics
    if verdict.is_carpet:
        assert d.nerve_planar and d.hyperbolic and d.unseparable and d.vcd == 2
    if d.nerve_planar and d.sphere_tri is not True and verdict.boundary is not Boundary.EMPTY:
        assert d.vcd <= 2


def test_reports_are_deterministic():
    first = emit_report(classify("antiprism", 5))
    second = emit_report(classify("antiprism", 5))
    assert first == second


@pytest.mark.parametrize("G", list(small_graphs(6)), ids=lambda G: f"{G.number_of_nodes()}v{G.number_of_edges()}e")
def test_nerve_planarity_matches_the_oracle(G):
    verdict = theorem1_racg(G)
    if verdict.boundary is not Boundary.EMPTY:
        assert verdict.diagnostics.nerve_planar == planarity_oracle_small(nerve_of_racg(G).complex)


@pytest.mark.slow
def test_every_graph_on_seven_vertices_gets_a_verdict():
    boundaries = {theorem1_racg(G).boundary for G in small_graphs(7)}
    assert Boundary.CIRCLE in boundaries
    assert Boundary.NOT_CARPET in boundaries
