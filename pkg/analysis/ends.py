import math

from analysis.classify import diagram_components, is_finite
from analysis.complexes import components
from analysis.separation import separating_simplices
from analysis.topology_forms import is_simplex
from models.coxeter_matrix import INF


def count_ends(M, L):
    """Number of ends of W (0, 1, 2 or math.inf) read off the diagram and the nerve."""
    K = L.complex
    if is_simplex(K):
        return 0
    infinite = [c for c in diagram_components(M, M.generators) if not is_finite(M, c)]
    if len(infinite) == 1 and len(infinite[0]) == 2 and M.m(*infinite[0]) == INF:
        return 2
    if len(components(K)) > 1 or separating_simplices(L):
        return math.inf
    return 1
