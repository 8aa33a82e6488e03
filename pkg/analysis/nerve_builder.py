"""Labelled nerves of Coxeter systems."""
import logging

import networkx as nx

from analysis.classify import is_finite
from models.coxeter_matrix import CoxeterMatrix, INF
from models.labelled_nerve import LabelledNerve
from models.simplicial_complex import SimplicialComplex

logger = logging.getLogger(__name__)


def finite_subsets(M):
    """All nonempty finite subsets, found by depth-first clique extension.

    A branch only adds generators later in the declared order that are joined
    to every current member by a finite exponent, and stops as soon as the
    subset is no longer finite.
    """
    S = M.generators
    found = []

    def extend(current, start):
        found.append(current)
        for j in range(start, len(S)):
            t = S[j]
            if all(M.m(s, t) != INF for s in current) and is_finite(M, current | {t}):
                extend(current | {t}, j + 1)

    for i, s in enumerate(S):
        extend(frozenset([s]), i + 1)
    return found


def nerve(M):
    """Labelled nerve of (W, S): faces are the subsets generating finite subgroups."""
    faces = finite_subsets(M)
    face_set = set(faces)
    maximal = [
        face for face in faces
        if not any(face | {t} in face_set for t in M.generators if t not in face)
    ]
    logger.debug("Nerve of %d generators: %d finite subsets, %d maximal", len(M), len(faces), len(maximal))
    complex = SimplicialComplex(M.generators, maximal)
    labels = {frozenset((s, t)): m for s, t, m in M.finite_pairs()}
    return LabelledNerve(complex, labels, origin=M)


def racg_matrix(G):
    """Right-angled matrix of a simple graph (node order is the generator order)."""
    return CoxeterMatrix.right_angled([str(v) for v in G.nodes], [(str(u), str(v)) for u, v in G.edges])


def nerve_of_racg(G):
    """Flag complex of G with every edge labelled 2."""
    if nx.number_of_selfloops(G):
        raise ValueError("A right-angled system needs a graph without loops")
    M = racg_matrix(G)
    graph = nx.relabel_nodes(G, str)
    cliques = [frozenset(c) for c in nx.find_cliques(graph)] if graph.number_of_nodes() else []
    complex = SimplicialComplex(M.generators, cliques)
    labels = {frozenset((str(u), str(v))): 2 for u, v in G.edges}
    return LabelledNerve(complex, labels, origin=M)
