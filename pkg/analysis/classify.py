"""Finite and affine recognition of special subgroups from their Coxeter diagrams."""
from fractions import Fraction
from functools import lru_cache

from analysis.templates import candidate_templates
from models.cosine_matrix import CosineMatrix, Definiteness, DefinitenessClass
from models.coxeter_matrix import INF
from utils.exact import exact_inertia, interval_inertia_class, is_exact_angle
from utils.graph_utils import are_isomorphic_labelled_graphs, labelled_graph, ordered_components

FINITE = "finite"
AFFINE = "affine"


def edge_angle(m):
    """Angle (as a multiple of pi) whose cosine is -cos(pi/m)."""
    if m == INF:
        return Fraction(1)
    return 1 - Fraction(1, m)


def diagram_graph(M, T):
    """Coxeter diagram on T: an edge for every pair with m >= 3, including inf."""
    T = M.ordered(T)
    edges = []
    for i, s in enumerate(T):
        for t in T[i + 1:]:
            m = M.m(s, t)
            if m >= 3:
                edges.append((s, t, m))
    return labelled_graph(T, edges)


def diagram_components(M, T):
    """Connected components of the diagram on T, each in generator order."""
    return ordered_components(diagram_graph(M, T), M.index)


def cosine_matrix(M, T):
    T = M.ordered(T)
    angles = [[Fraction(0) if s == t else edge_angle(M.m(s, t)) for t in T] for s in T]
    return CosineMatrix(T, angles)


@lru_cache(maxsize=4096)
def _definiteness(angles):
    if all(is_exact_angle(a) for row in angles for a in row):
        positive, nullity, negative = exact_inertia(angles)
        if negative:
            return Definiteness(DefinitenessClass.INDEFINITE)
        if nullity:
            return Definiteness(DefinitenessClass.PSD_SINGULAR, nullity)
        return Definiteness(DefinitenessClass.POSITIVE_DEFINITE)
    if interval_inertia_class(angles) == "PD":
        return Definiteness(DefinitenessClass.POSITIVE_DEFINITE)
    return Definiteness(DefinitenessClass.INDEFINITE)


def definiteness(C):
    """Sign class of a cosine matrix (exact when possible, certified otherwise)."""
    if C.size == 0:
        return Definiteness(DefinitenessClass.POSITIVE_DEFINITE)
    return _definiteness(C.angles)


@lru_cache(maxsize=65536)
def _component_type(M, component):
    """(FINITE | AFFINE | None, type name) of a connected diagram component."""
    members = M.ordered(component)
    if len(members) == 1:
        return FINITE, "A1"
    if len(members) == 2:
        m = M.m(*members)
        return (AFFINE, "~A1") if m == INF else (FINITE, f"I2({m})")
    graph = diagram_graph(M, members)
    for kind in (FINITE, AFFINE):
        for name, template in candidate_templates(kind, graph):
            if are_isomorphic_labelled_graphs(graph, template):
                return kind, name
    return None, None


def component_types(M, T):
    """Type names of the diagram components of T (None for other types)."""
    return [_component_type(M, frozenset(c))[1] for c in diagram_components(M, T)]


def is_finite(M, T):
    """Whether W_T is finite: every diagram component matches a finite template."""
    T = frozenset(T)
    if not T:
        return True
    return all(_component_type(M, frozenset(c))[0] == FINITE for c in diagram_components(M, T))


def is_affine_irreducible(M, T):
    """Whether T is one diagram component of irreducible affine type."""
    T = frozenset(T)
    if not T:
        return False
    parts = diagram_components(M, T)
    return len(parts) == 1 and _component_type(M, T)[0] == AFFINE
