"""Excluded forms of the nerve and the cohomological dimension formula."""
import logging
from enum import Enum

import networkx as nx

from analysis.complexes import components, delete_vertices, is_connected
from models.cohomology_ranks import CohomologyRanks
from models.labelled_nerve import LabelledNerve
from models.witness import FormWitness, WitnessKind
from utils import config
from utils.errors import DimensionGuardError
from utils.exact import matrix_rank

logger = logging.getLogger(__name__)


class NerveKind(Enum):
    GRAPH = "GRAPH"
    DISC = "DISC"
    PLANAR_SURFACE = "PLANAR_SURFACE"
    SPHERE = "SPHERE"
    OTHER = "OTHER"


def _complex(K):
    return K.complex if isinstance(K, LabelledNerve) else K


def is_simplex(K):
    K = _complex(K)
    return not K.is_empty() and len(K.maximal_faces) == 1


def link_graph(K, v):
    """Link of v: its neighbours, joined when they span a triangle with v."""
    K = _complex(K)
    graph = nx.Graph()
    graph.add_nodes_from(K.neighbors(v))
    for face in K.triangles():
        if v in face:
            graph.add_edge(*(face - {v}))
    return graph


def is_cycle_graph(graph):
    return (
        graph.number_of_nodes() >= 3
        and all(d == 2 for _, d in graph.degree())
        and nx.is_connected(graph)
    )


def edge_triangle_counts(K):
    counts = {edge: 0 for edge in K.edges()}
    for face in K.triangles():
        for x in face:
            counts[face - {x}] += 1
    return counts


def euler_characteristic(K):
    K = _complex(K)
    return sum((-1) ** (len(face) - 1) for face in K.faces())


def is_circle_triangulation(K):
    K = _complex(K)
    if K.is_empty() or any(len(face) != 2 for face in K.maximal_faces):
        return False
    return is_cycle_graph(K.one_skeleton())


def is_sphere_triangulation(K):
    K = _complex(K)
    if K.is_empty() or any(len(face) != 3 for face in K.maximal_faces):
        return False
    if not is_connected(K):
        return False
    if any(count != 2 for count in edge_triangle_counts(K).values()):
        return False
    if not all(is_cycle_graph(link_graph(K, v)) for v in K.vertices):
        return False
    return euler_characteristic(K) == 2


def wheel_apex(L):
    """Cone vertex of a labelled wheel structure on L, or None."""
    K = L.complex
    n = len(K.vertices)
    if n < 4:
        return None
    for c in K.vertices:
        if len(K.neighbors(c)) != n - 1:
            continue
        if any(L.label(c, x) != 2 for x in K.neighbors(c)):
            continue
        if not all(c in face for face in K.maximal_faces):
            continue
        rim = delete_vertices(K, {c})
        if is_circle_triangulation(rim) and len(K.maximal_faces) == len(rim.maximal_faces):
            return c
    return None


def is_labelled_wheel(L):
    return wheel_apex(L) is not None


def form_witness(K):
    """Witness for the first excluded form K has (simplex, circle, wheel, sphere), or None."""
    complex = _complex(K)
    if is_simplex(complex):
        return FormWitness(WitnessKind.SIMPLEX_NERVE, complex.vertices)
    if is_circle_triangulation(complex):
        return FormWitness(WitnessKind.CIRCLE_TRIANGULATION, complex.vertices)
    if isinstance(K, LabelledNerve):
        apex = wheel_apex(K)
        if apex is not None:
            return FormWitness(WitnessKind.LABELLED_WHEEL, complex.vertices, apex=apex)
    if is_sphere_triangulation(complex):
        return FormWitness(WitnessKind.SPHERE_TRIANGULATION, complex.vertices)
    return None


def _boundary_matrix(K, k, modulus):
    """Rank of the boundary map from k-faces to (k-1)-faces (k = 0 is augmentation)."""
    columns = K.faces(k)
    if not columns:
        return 0
    if k == 0:
        return 1
    rows = K.faces(k - 1)
    row_index = {face: i for i, face in enumerate(rows)}
    matrix = [[0] * len(columns) for _ in rows]
    for j, face in enumerate(columns):
        ordered = K.ordered(face)
        for position, v in enumerate(ordered):
            matrix[row_index[face - {v}]][j] = (-1) ** position
    return matrix_rank(matrix, len(columns), modulus=modulus)


def reduced_cohomology_ranks(K, modulus=None):
    """Reduced cohomology ranks in degrees -1..2 over QQ (or GF(2))."""
    K = _complex(K)
    limit = config.cohomology_max_dimension()
    if K.dimension > limit:
        raise DimensionGuardError(f"Cohomology is computed up to dimension {limit}, got {K.dimension}")
    sizes = [1] + [len(K.faces(k)) for k in range(0, 3)]
    boundary_ranks = [0] + [_boundary_matrix(K, k, modulus) for k in range(0, 3)] + [0]
    # boundary_ranks[i] is the rank of the map out of degree i - 1
    ranks = [sizes[i] - boundary_ranks[i] - boundary_ranks[i + 1] for i in range(4)]
    return CohomologyRanks(ranks, "GF(2)" if modulus == 2 else "QQ")


def _deletions(K):
    yield (), K
    for face in K.faces():
        yield K.ordered(face), delete_vertices(K, face)


def vcd(M, L):
    """Virtual cohomological dimension of W from its nerve."""
    K = _complex(L)
    if is_simplex(K):
        return 0
    best = 0
    for _, deleted in _deletions(K):
        for degree in reduced_cohomology_ranks(deleted).nonzero_degrees():
            best = max(best, degree + 1)
    logger.debug("vcd of %d-generator system: %d", len(M), best)
    return best


def torsion_suspects(L):
    """Deleted faces whose reduced ranks differ over GF(2) and QQ."""
    K = _complex(L)
    suspects = []
    for face, deleted in _deletions(K):
        if reduced_cohomology_ranks(deleted) != reduced_cohomology_ranks(deleted, modulus=2):
            suspects.append(face)
    return suspects


def nerve_kind(K):
    """Coarse surface type of a nerve."""
    K = _complex(K)
    if K.dimension <= 1:
        return NerveKind.GRAPH
    if is_sphere_triangulation(K):
        return NerveKind.SPHERE
    if any(len(face) != 3 for face in K.maximal_faces) or len(components(K)) != 1:
        return NerveKind.OTHER
    counts = edge_triangle_counts(K)
    if any(c not in (1, 2) for c in counts.values()):
        return NerveKind.OTHER
    for v in K.vertices:
        link = link_graph(K, v)
        if not nx.is_connected(link) or any(d > 2 for _, d in link.degree()):
            return NerveKind.OTHER
    boundary = nx.Graph()
    boundary.add_edges_from(tuple(e) for e, c in counts.items() if c == 1)
    holes = nx.number_connected_components(boundary)
    chi = euler_characteristic(K)
    if holes == 1 and chi == 1:
        return NerveKind.DISC
    if holes >= 2 and chi == 2 - holes:
        return NerveKind.PLANAR_SURFACE
    return NerveKind.OTHER
