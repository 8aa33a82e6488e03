"""Piecewise spherical structure on nerves, metric flagness and doubling."""
import logging
from fractions import Fraction

import networkx as nx

from analysis.classify import definiteness
from models.cosine_matrix import CosineMatrix
from models.labelled_nerve import LabelledNerve
from models.simplicial_complex import SimplicialComplex
from models.spherical_complex import SphericalComplex
from utils.errors import ComplexError

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def spherical_structure(L):
    """Edge {s, t} gets length pi - pi/m_st."""
    lengths = {edge: 1 - Fraction(1, m) for edge, m in L.labels.items()}
    return SphericalComplex(L.complex, lengths)


def has_size_ge_half_pi(X):
    return all(length >= HALF for length in X.edge_lengths.values())


def clique_cosine_matrix(X, clique):
    clique = X.complex.ordered(clique)
    angles = [[0 if s == t else X.length(s, t) for t in clique] for s in clique]
    return CosineMatrix(clique, angles)


def is_metrically_flag(X):
    """Return (metrically flag, violating clique).

    A clique must span a face exactly when its cosine matrix is positive definite.
    """
    if not has_size_ge_half_pi(X):
        raise ComplexError("Metric flagness needs every edge to have length at least pi/2")
    complex = X.complex
    for clique in nx.enumerate_all_cliques(complex.one_skeleton()):
        if len(clique) < 2:
            continue
        positive = definiteness(clique_cosine_matrix(X, clique)).is_positive_definite
        if positive != complex.is_face(clique):
            logger.debug("Clique %s violates metric flagness", clique)
            return False, complex.ordered(clique)
    return True, None


def _copy_names(complex, K):
    """Names of the second copy for every vertex outside K."""
    taken = set(complex.vertices)
    names = {}
    for v in complex.vertices:
        if v in K:
            continue
        name = v + "'"
        while name in taken:
            name += "'"
        taken.add(name)
        names[v] = name
    return names


def double_along(X, K):
    """Two copies of X glued along the full subcomplex on K."""
    K = frozenset(K)
    complex = X.complex
    complex.check_vertices(K)
    names = _copy_names(complex, K)

    def image(face):
        return frozenset(names.get(v, v) for v in face)

    vertices = list(complex.vertices) + [names[v] for v in complex.vertices if v in names]
    faces = list(complex.maximal_faces) + [image(face) for face in complex.maximal_faces]
    doubled = SimplicialComplex(vertices, faces)

    if isinstance(X, LabelledNerve):
        values = X.labels
    else:
        values = X.edge_lengths
    carried = dict(values)
    carried.update({image(edge): value for edge, value in values.items()})

    if isinstance(X, LabelledNerve):
        return LabelledNerve(doubled, carried)
    return SphericalComplex(doubled, carried)


def swap_involution(X, K):
    """Vertex map of the doubling of X along K that exchanges the two copies."""
    names = _copy_names(X.complex, frozenset(K))
    mapping = {v: v for v in X.complex.vertices}
    for v, name in names.items():
        mapping[v] = name
        mapping[name] = v
    return mapping


def is_automorphism(Y, mapping):
    """Whether the vertex map preserves faces and edge labels or lengths."""
    complex = Y.complex
    if set(mapping) != set(complex.vertices) or set(mapping.values()) != set(complex.vertices):
        return False
    faces = set(complex.maximal_faces)
    if {frozenset(mapping[v] for v in face) for face in faces} != faces:
        return False
    values = Y.labels if isinstance(Y, LabelledNerve) else Y.edge_lengths
    return all(values[frozenset(mapping[v] for v in edge)] == value for edge, value in values.items())
