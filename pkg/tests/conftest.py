import networkx as nx
import pytest

from analysis.complexes import build_complex
from analysis.nerve_builder import nerve, nerve_of_racg
from utils.families import make_family


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("CARPET_PLANARITY_CROSSCHECK", "CARPET_ORACLE_MAX_VERTICES", "CARPET_MAX_GENERATORS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def racg():
    """Labelled nerve of the right-angled system on edges 'a-b b-c ...'."""
    def build(edges, vertices=()):
        G = nx.Graph()
        G.add_nodes_from(vertices)
        G.add_edges_from(e.split("-") for e in edges.split())
        return nerve_of_racg(G)
    return build


@pytest.fixture
def family_nerve():
    def build(name, n=None, overrides=()):
        return nerve(make_family(name, n, overrides))
    return build


@pytest.fixture
def complex_of():
    def build(*faces):
        return build_complex([tuple(face) for face in faces])
    return build
