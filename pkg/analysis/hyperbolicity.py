"""Word-hyperbolicity of Coxeter groups (Moussong's criterion)."""
import logging
from collections import deque
from itertools import combinations

from analysis.classify import diagram_graph, is_affine_irreducible, is_finite
from models.coxeter_matrix import INF
from models.witness import HyperbolicityWitness, WitnessKind
from utils.errors import ConsistencyError, RightAngledRequiredError

logger = logging.getLogger(__name__)


def _diagram_scan(M):
    """Grow connected diagram subsets through finite ones.

    Returns (affine subsets of rank >= 3, minimal infinite subsets). Every
    minimal infinite subset is connected and all its proper subsets are
    finite, so it is reached from a finite connected subset by one step.
    """
    diagram = diagram_graph(M, M.generators)
    seen = set()
    queue = deque()
    for s in M.generators:
        start = frozenset([s])
        seen.add(start)
        queue.append(start)

    affine = []
    minimal_infinite = []
    while queue:
        current = queue.popleft()
        frontier = {t for s in current for t in diagram[s]} - current
        for t in frontier:
            candidate = current | {t}
            if candidate in seen:
                continue
            seen.add(candidate)
            if is_finite(M, candidate):
                queue.append(candidate)
                continue
            if all(is_finite(M, candidate - {x}) for x in candidate):
                minimal_infinite.append(candidate)
                if len(candidate) >= 3 and is_affine_irreducible(M, candidate):
                    affine.append(candidate)
    logger.debug("Diagram scan visited %d connected subsets", len(seen))
    return affine, minimal_infinite


def minimal_infinite_subsets(M):
    """Infinite subsets all of whose proper subsets are finite, in generator order."""
    _, minimal = _diagram_scan(M)
    return sorted(minimal, key=lambda T: (len(T), M.sort_key(T)))


def _commute(M, first, second):
    return all(M.m(s, t) == 2 for s in first for t in second)


def is_hyperbolic(M):
    """Return (hyperbolic, witness) for the Coxeter system M."""
    affine, minimal = _diagram_scan(M)
    if affine:
        least = min(affine, key=M.sort_key)
        return False, HyperbolicityWitness.affine_subset(M.ordered(least))

    products = []
    for first, second in combinations(minimal, 2):
        if not first & second and _commute(M, first, second):
            pair = sorted((first, second), key=M.sort_key)
            products.append(pair)
    if products:
        first, second = min(products, key=lambda p: (M.sort_key(p[0]), M.sort_key(p[1])))
        return False, HyperbolicityWitness.product(M.ordered(first), M.ordered(second))
    return True, None


def has_empty_square(L):
    """A 4-cycle of L's 1-skeleton with neither diagonal, or None.

    Only defined for right-angled nerves.
    """
    if not L.is_right_angled():
        raise RightAngledRequiredError("Empty squares are only defined for right-angled nerves")
    complex = L.complex
    graph = complex.one_skeleton()
    for a, c in combinations(complex.vertices, 2):
        if graph.has_edge(a, c):
            continue
        common = complex.ordered(set(graph[a]) & set(graph[c]))
        for b, d in combinations(common, 2):
            if not graph.has_edge(b, d):
                return a, b, c, d
    return None


def right_angled_hyperbolicity(M, L):
    """Empty-square test on a right-angled nerve, cross-checked with the general criterion."""
    square = has_empty_square(L)
    general, _ = is_hyperbolic(M)
    if general != (square is None):
        raise ConsistencyError("Empty-square test and Moussong criterion disagree")
    if square is None:
        return True, None
    return False, HyperbolicityWitness.empty_square(square)


def verify_witness(M, witness):
    """Re-check a hyperbolicity witness against M."""
    if witness.kind is WitnessKind.AFFINE_SUBSET:
        (T,) = witness.parts
        return len(T) >= 3 and is_affine_irreducible(M, T)
    if witness.kind is WitnessKind.PRODUCT_OF_INFINITES:
        first, second = witness.parts
        return (
            not set(first) & set(second)
            and _commute(M, first, second)
            and not is_finite(M, first)
            and not is_finite(M, second)
        )
    if witness.kind is WitnessKind.EMPTY_SQUARE:
        (cycle,) = witness.parts
        a, b, c, d = cycle
        sides = [(a, b), (b, c), (c, d), (d, a)]
        return (
            len(set(cycle)) == 4
            and all(M.m(s, t) != INF for s, t in sides)
            and M.m(a, c) == INF
            and M.m(b, d) == INF
        )
    return False
