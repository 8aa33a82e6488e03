import pytest

from analysis.oracles import LABELS, OracleReport, _finite_diagrams, connected_diagrams, curated_complexes, small_graphs
from utils import config


def test_report_records_disagreements():
    report = OracleReport("demo")
    report.record(True, "first")
    report.record(False, "second")
    assert report.cases == 2
    assert not report.ok
    assert report.to_dict() == {"suite": "demo", "cases": 2, "disagreements": ["second"]}


def test_connected_diagrams():
    # a pair is connected exactly when its label is at least 3
    assert len(list(connected_diagrams(2))) == 5
    assert all(len(M) == 3 for M in connected_diagrams(3, labels=(2, 3)))


@pytest.mark.parametrize("rank, classes", [(2, 4), (3, 3), (4, 5)])
def test_finite_diagram_classes(rank, classes):
    # I2(3..6); A3 B3 H3; A4 B4 D4 F4 H4
    assert len(_finite_diagrams(rank, LABELS)) == classes


def test_affine_diagrams_are_reached():
    # the affine triangle and affine B2 extend finite parents
    keys = {tuple(sorted(m for _, _, m in M.pairs())) for M in connected_diagrams(3)}
    assert (3, 3, 3) in keys
    assert (2, 4, 4) in keys


def test_small_graph_counts():
    assert sum(1 for _ in small_graphs(4)) == 1 + 2 + 4 + 11


def test_curated_complexes_fit_the_oracle():
    names = [name for name, _, _ in curated_complexes()]
    assert len(names) == len(set(names))
    assert all(len(K.vertices) <= 8 for _, K, _ in curated_complexes())


def test_config_parsing(monkeypatch):
    monkeypatch.setenv("CARPET_ORACLE_MAX_VERTICES", "6")
    assert config.oracle_max_vertices() == 6
    monkeypatch.setenv("CARPET_ORACLE_MAX_VERTICES", "many")
    assert config.oracle_max_vertices() == 8
    monkeypatch.setenv("CARPET_PLANARITY_CROSSCHECK", "yes")
    assert config.planarity_crosscheck()
    monkeypatch.setenv("CARPET_PLANARITY_CROSSCHECK", "0")
    assert not config.planarity_crosscheck()
