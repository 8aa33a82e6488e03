"""Constructions on simplicial complexes shared by every analysis module."""
import networkx as nx

from models.labelled_nerve import LabelledNerve
from models.simplicial_complex import SimplicialComplex
from utils.errors import ComplexError
from utils.graph_utils import labelled_graph, labelled_isomorphisms, ordered_components


def build_complex(maximal_faces, vertices=None):
    """Build a complex from faces; vertex order defaults to sorted symbols."""
    faces = [tuple(str(v) for v in face) for face in maximal_faces]
    if vertices is None:
        vertices = sorted({v for face in faces for v in face})
    return SimplicialComplex(vertices, faces)


def full_subcomplex(K, A):
    """The induced complex on the vertex set A (vertex order inherited from K)."""
    A = frozenset(A)
    K.check_vertices(A)
    faces = [face & A for face in K.maximal_faces]
    return SimplicialComplex(K.ordered(A), [f for f in faces if f], allow_empty=True)


def delete_vertices(K, A):
    """The full subcomplex on the complement of A."""
    K.check_vertices(A)
    return full_subcomplex(K, set(K.vertices) - set(A))


def is_connected(K):
    if K.is_empty():
        raise ComplexError("Connectivity of the empty complex is undefined")
    return nx.is_connected(K.one_skeleton())


def components(K):
    """Connected components as vertex tuples, ordered by their first vertex."""
    return ordered_components(K.one_skeleton(), K.index)


def labelled_one_skeleton(nerve):
    return labelled_graph(
        nerve.vertices,
        ((*tuple(edge), label) for edge, label in nerve.labels.items()),
    )


def are_isomorphic_labelled(K1, K2):
    """Whether a label-preserving vertex bijection maps faces onto faces."""
    if len(K1.vertices) != len(K2.vertices):
        return False
    if sorted(map(len, K1.complex.maximal_faces)) != sorted(map(len, K2.complex.maximal_faces)):
        return False
    target_faces = set(K2.complex.maximal_faces)
    for mapping in labelled_isomorphisms(labelled_one_skeleton(K1), labelled_one_skeleton(K2)):
        image = {frozenset(mapping[v] for v in face) for face in K1.complex.maximal_faces}
        if image == target_faces:
            return True
    return False


def labelled_full_subcomplex(nerve, A):
    """Restrict a labelled nerve to the full subcomplex on A."""
    sub = full_subcomplex(nerve.complex, A)
    labels = {e: m for e, m in nerve.labels.items() if e <= frozenset(A)}
    return LabelledNerve(sub, labels)
