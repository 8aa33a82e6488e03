"""Cross-check suites: independent oracles run over exhaustive small families."""
import logging
from functools import lru_cache
from itertools import combinations, permutations, product

import networkx as nx

from analysis.classify import cosine_matrix, definiteness, is_affine_irreducible, is_finite
from analysis.complexes import build_complex
from analysis.hyperbolicity import has_empty_square, is_hyperbolic
from analysis.nerve_builder import nerve_of_racg, racg_matrix
from analysis.planarity import is_planar_complex, planarity_oracle_small
from models.cosine_matrix import DefinitenessClass
from models.coxeter_matrix import CoxeterMatrix, INF
from utils import config

logger = logging.getLogger(__name__)

LABELS = (2, 3, 4, 5, 6, INF)


class OracleReport:
    """Oracle report model class."""

    def __init__(self, suite, cases=0, disagreements=None):
        self.suite = suite
        self.cases = cases
        self.disagreements = list(disagreements or [])

    @property
    def ok(self):
        return not self.disagreements

    def record(self, agree, case):
        self.cases += 1
        if not agree:
            logger.warning("%s suite disagreement: %s", self.suite, case)
            self.disagreements.append(case)

    def to_dict(self):
        return {"suite": self.suite, "cases": self.cases, "disagreements": self.disagreements}


def _canonical_key(M):
    """Exponent tuple of M, minimized over generator orders."""
    n = len(M)
    pairs = list(combinations(range(n), 2))
    return min(tuple(M.m(order[i], order[j]) for i, j in pairs) for order in permutations(M.generators))


@lru_cache(maxsize=None)
def _finite_diagrams(n, labels):
    """One connected finite diagram on g1..gn per isomorphism class, by the definiteness oracle."""
    found = {}
    for M in connected_diagrams(n, labels):
        if definiteness(cosine_matrix(M, M.generators)).is_positive_definite:
            found.setdefault(_canonical_key(M), M)
    return tuple(found.values())


def connected_diagrams(n, labels=LABELS):
    """Connected diagrams on g1..gn that stay finite and connected once gn is removed.

    Every finite and every irreducible affine diagram of rank n is isomorphic to
    one of these; any other connected diagram has a connected proper subdiagram
    that is not positive definite, so it is neither.
    """
    if n == 1:
        yield CoxeterMatrix(["g1"])
        return
    new = f"g{n}"
    for parent in _finite_diagrams(n - 1, tuple(labels)):
        old = parent.generators
        base = {frozenset((s, t)): parent.m(s, t) for s, t in combinations(old, 2)}
        for choice in product(labels, repeat=len(old)):
            if all(m == 2 for m in choice):
                continue
            relations = dict(base)
            relations.update((frozenset((s, new)), m) for s, m in zip(old, choice))
            yield CoxeterMatrix((*old, new), relations)


def finite_suite(max_vertices=3, labels=LABELS):
    """Template recognition of finite types against positive definiteness."""
    report = OracleReport("finite")
    for n in range(1, max_vertices + 1):
        for M in connected_diagrams(n, labels):
            expected = definiteness(cosine_matrix(M, M.generators)).is_positive_definite
            report.record(is_finite(M, M.generators) == expected, M.to_dict())
    return report


def affine_suite(max_vertices=3, labels=LABELS):
    """Template recognition of affine types against singular semidefiniteness."""
    report = OracleReport("affine")
    for n in range(2, max_vertices + 1):
        for M in connected_diagrams(n, labels):
            kind = definiteness(cosine_matrix(M, M.generators)).kind
            expected = kind is DefinitenessClass.PSD_SINGULAR
            report.record(is_affine_irreducible(M, M.generators) == expected, M.to_dict())
    return report


def small_graphs(max_vertices):
    """Every simple graph on 1..max_vertices vertices up to isomorphism (max 7)."""
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= max_vertices:
            yield G


def racg_hyperbolicity_suite(max_vertices=7):
    """Moussong's criterion against the empty-square test on right-angled systems."""
    report = OracleReport("racg")
    for G in small_graphs(max_vertices):
        M = racg_matrix(G)
        general, _ = is_hyperbolic(M)
        square = has_empty_square(nerve_of_racg(G))
        report.record(general == (square is None), sorted(map(list, M.to_dict()["relations"])))
    return report


def _cyclic(n, offsets):
    return [tuple(f"v{(i + k) % n}" for k in offsets) for i in range(n)]


def curated_complexes():
    """Named 2-complexes with known planarity, all on at most 8 vertices."""
    curated = [
        ("tetrahedron boundary", [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")], True),
        ("solid tetrahedron", [("a", "b", "c", "d")], False),
        ("three-page book", [("a", "b", "c"), ("a", "b", "d"), ("a", "b", "e")], False),
        ("two-page book", [("a", "b", "c"), ("a", "b", "d")], True),
        ("bowtie", [("a", "b", "c"), ("a", "d", "e")], True),
        ("octahedron", [(x, y, z) for x in ("x1", "x2") for y in ("y1", "y2") for z in ("z1", "z2")], True),
        (
            "octahedron minus a face",
            [(x, y, z) for x in ("x1", "x2") for y in ("y1", "y2") for z in ("z1", "z2")][1:],
            True,
        ),
        (
            "octahedron with a pendant edge",
            [(x, y, z) for x in ("x1", "x2") for y in ("y1", "y2") for z in ("z1", "z2")] + [("x1", "p")],
            False,
        ),
        (
            "tetrahedron boundary and a point",
            [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d"), ("p",)],
            False,
        ),
        (
            "two tetrahedron boundaries",
            [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d"),
             ("e", "f", "g"), ("e", "f", "h"), ("e", "g", "h"), ("f", "g", "h")],
            False,
        ),
        (
            "tetrahedron boundaries sharing a vertex",
            [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d"),
             ("a", "f", "g"), ("a", "f", "h"), ("a", "g", "h"), ("f", "g", "h")],
            False,
        ),
        ("triangle and disjoint edge", [("a", "b", "c"), ("d", "e")], True),
        ("moebius band", _cyclic(5, (0, 1, 2)), False),
        ("seven-vertex torus", _cyclic(7, (0, 1, 3)) + _cyclic(7, (0, 2, 3)), False),
        (
            "six-vertex projective plane",
            [("1", "2", "4"), ("1", "2", "6"), ("1", "3", "5"), ("1", "3", "6"), ("1", "4", "5"),
             ("2", "3", "5"), ("2", "3", "4"), ("2", "5", "6"), ("3", "4", "6"), ("4", "5", "6")],
            False,
        ),
        ("K5 graph", list(combinations("abcde", 2)), False),
        ("K3,3 graph", [(a, b) for a in "abc" for b in "xyz"], False),
        ("K4 graph", list(combinations("abcd", 2)), True),
        ("K4 graph with one filled face", [("a", "b", "c"), ("a", "d"), ("b", "d"), ("c", "d")], True),
    ]
    for n in range(3, 9):
        curated.append((f"{n}-cycle", _cyclic(n, (0, 1)), True))
    for n in range(3, 8):
        curated.append((f"cone over {n}-cycle", [("c", *t) for t in _cyclic(n, (0, 1))], True))
    for n in range(2, 7):
        curated.append((f"fan of {n} triangles", [("c", f"v{i}", f"v{i + 1}") for i in range(n)], True))
    for n in range(3, 5):
        rim = [(f"t{i}", f"t{(i + 1) % n}", f"b{i}") for i in range(n)]
        rim += [(f"b{i}", f"b{(i + 1) % n}", f"t{(i + 1) % n}") for i in range(n)]
        curated.append((f"{n}-gonal annulus", rim, True))
        curated.append((f"{n}-gonal annulus with a chord", rim + [("t0", "b1")], False))
    for n in range(3, 7):
        curated.append((f"bipyramid over {n}-cycle", [(p, *t) for p in ("p", "q") for t in _cyclic(n, (0, 1))], True))
    for n in range(3, 6):
        curated.append((f"tripyramid over {n}-cycle", [(p, *t) for p in ("p", "q", "r") for t in _cyclic(n, (0, 1))], False))
    for n in range(2, 7):
        curated.append((f"path of {n} triangles", [(f"v{i}", f"v{i + 1}", f"v{i + 2}") for i in range(n)], True))
    return [(name, build_complex(faces), planar) for name, faces, planar in curated]


def planarity_suite(max_vertices=6):
    """Augmented-graph planarity against the rotation-system oracle."""
    report = OracleReport("planarity")
    limit = config.oracle_max_vertices()
    for G in small_graphs(max_vertices):
        complex = nerve_of_racg(G).complex
        report.record(is_planar_complex(complex) == planarity_oracle_small(complex, limit), sorted(map(list, G.edges)))
    for name, complex, _ in curated_complexes():
        if len(complex.vertices) <= limit:
            report.record(is_planar_complex(complex) == planarity_oracle_small(complex, limit), name)
    return report
