"""Embeddability of nerves in the 2-sphere and their completion to sphere triangulations.

A 2-complex is tested through its augmented graph: every edge is subdivided,
every triangle gets an apex joined to its three vertices and three edge
midpoints, and components are tied together through one extra hub vertex.
A planar embedding of that graph is normalized so that every triangle wedge
holds nothing but its own apex, and the resulting rotation system of the
1-skeleton is checked face by face before it is trusted.
"""
import logging
from itertools import permutations, product

import networkx as nx

from analysis.complexes import components, full_subcomplex
from analysis.topology_forms import is_sphere_triangulation, link_graph
from models.labelled_nerve import LabelledNerve
from models.rotation_system import RotationSystem
from models.simplicial_complex import SimplicialComplex
from models.witness import PlanarityFailure, PlanarityWitness
from utils import config
from utils.errors import PlanarityDisagreementError, SizeGuardError, SphereCompletionError

logger = logging.getLogger(__name__)

HUB = ("hub",)


class ComplexEmbedding:
    """A verified embedding of a 2-complex (plus an optional hub) in the sphere."""

    def __init__(self, rotation, faces, filled, hub=None):
        self.rotation = rotation
        self.faces = faces
        self.filled = filled
        self.hub = hub

    def open_faces(self):
        return [face for i, face in enumerate(self.faces) if i not in self.filled]


def _fresh_names(taken, stem):
    taken = set(taken)
    counter = 0
    while True:
        counter += 1
        name = f"{stem}{counter}"
        if name not in taken:
            taken.add(name)
            yield name


def _edge_node(u, v):
    return ("e", frozenset((u, v)))


def _triangle_node(face):
    return ("t", face)


def _link_defect(link):
    """Whether a vertex link cannot sit in a plane around its vertex."""
    cycles = nx.cycle_basis(link)
    if not cycles:
        return False
    return len(cycles) > 1 or len(cycles[0]) != link.number_of_nodes()


def _has_free_corner(link):
    return not nx.cycle_basis(link)


def _precheck(K):
    """The first local obstruction to planarity, as a PlanarityWitness, or None."""
    for face in K.maximal_faces:
        if len(face) >= 4:
            return PlanarityWitness(PlanarityFailure.HIGH_DIMENSIONAL_FACE, K.ordered(face))

    counts = {}
    for face in K.triangles():
        for x in face:
            counts[face - {x}] = counts.get(face - {x}, 0) + 1
    for edge in K.edges():
        if counts.get(edge, 0) >= 3:
            return PlanarityWitness(PlanarityFailure.EDGE_IN_THREE_TRIANGLES, K.ordered(edge))

    for v in K.vertices:
        if _link_defect(link_graph(K, v)):
            return PlanarityWitness(PlanarityFailure.LINK_NOT_PLANAR, (v,))

    parts = components(K)
    if len(parts) > 1:
        for part in parts:
            if not any(_has_free_corner(link_graph(K, v)) for v in part):
                return PlanarityWitness(PlanarityFailure.CLOSED_COMPONENT, part)
    return None


def augmented_graph(K, hub_vertices=()):
    """Subdivided 1-skeleton with a wheel over every triangle and an optional hub."""
    graph = nx.Graph()
    graph.add_nodes_from(("v", x) for x in K.vertices)
    for edge in K.edges():
        u, w = K.ordered(edge)
        graph.add_edge(("v", u), _edge_node(u, w))
        graph.add_edge(_edge_node(u, w), ("v", w))
    for face in K.triangles():
        apex = _triangle_node(face)
        for x in face:
            graph.add_edge(apex, ("v", x))
            graph.add_edge(apex, ("e", face - {x}))
    for x in hub_vertices:
        graph.add_edge(HUB, ("v", x))
    return graph


def _wedge(items, v, face):
    """Closed clockwise arc at v from one edge of face to the other through its apex."""
    u, w = sorted(face - {v})
    pu = items.index(_edge_node(v, u))
    pw = items.index(_edge_node(v, w))
    apex = items.index(_triangle_node(face))
    n = len(items)

    def between(a, b):
        return [(a + k) % n for k in range(1, (b - a) % n)]

    inner = between(pu, pw)
    if apex in inner:
        return [pu, *inner, pw]
    return [pw, *between(pw, pu), pu]


def _wedge_nodes(v, face):
    return {_edge_node(v, u) for u in face - {v}} | {_triangle_node(face)}


def _free_gap(items, v, faces):
    """Index i such that the gap after items[i] lies in no triangle wedge, or None.

    Triangles whose wedge was lifted out of items with a moved block are skipped.
    """
    present = set(items)
    blocked = set()
    for face in faces:
        if _wedge_nodes(v, face) <= present:
            blocked.update(_wedge(items, v, face)[:-1])
    for i in range(len(items)):
        if i not in blocked:
            return i
    return None


def _normalize(items, v, faces):
    """Move whatever sits inside a triangle wedge at v out to a free gap."""
    items = list(items)
    while True:
        for face in faces:
            arc = _wedge(items, v, face)
            intruders = [items[p] for p in arc[1:-1] if items[p] != _triangle_node(face)]
            if intruders:
                break
        else:
            return items
        moved = set(intruders)
        rest = [x for x in items if x not in moved]
        gap = _free_gap(rest, v, faces)
        if gap is None:
            return None
        items = rest[:gap + 1] + intruders + rest[gap + 1:]


def _clockwise(embedding, node):
    if node not in embedding or not embedding[node]:
        return []
    return list(embedding.neighbors_cw_order(node))


def _embed(K, hub_for_edgeless=False):
    """Verified embedding of K, or None when K has no embedding in the sphere."""
    parts = components(K)
    hub = None
    attach = ()
    if len(parts) > 1 or (hub_for_edgeless and not K.edges()):
        hub = next(_fresh_names(K.vertices, "hub"))
        attach = []
        for part in parts:
            free = [v for v in part if _has_free_corner(link_graph(K, v))]
            if not free:
                return None
            attach.append(free[0])

    graph = augmented_graph(K, attach)
    planar, embedding = nx.check_planarity(graph)
    if not planar:
        return None

    triangles_at = {v: [f for f in K.triangles() if v in f] for v in K.vertices}
    rotation = {}
    filled_corners = set()
    for v in K.vertices:
        items = _normalize(_clockwise(embedding, ("v", v)), v, triangles_at[v])
        if items is None:
            return None
        names = []
        for item in items:
            if item[0] == "e":
                (other,) = item[1] - {v}
                names.append(other)
            elif item == HUB:
                names.append(hub)
        rotation[v] = names
        # a corner is filled when the apex of its triangle sits right after the first edge
        for i, item in enumerate(items):
            if item[0] != "e":
                continue
            following = items[(i + 1) % len(items)]
            if following[0] == "t":
                (u,) = item[1] - {v}
                (w,) = following[1] - {u, v}
                filled_corners.add((u, v, w))
    if hub is not None:
        rotation[hub] = [item[1] for item in _clockwise(embedding, HUB)]

    system = RotationSystem(rotation)
    if not system.is_spherical(1):
        raise PlanarityDisagreementError("Normalized embedding does not have genus zero")

    faces = system.faces()
    filled = set()
    seen_triangles = set()
    for index, walk in enumerate(faces):
        n = len(walk)
        corners = [(walk[i], walk[(i + 1) % n], walk[(i + 2) % n]) for i in range(n)]
        flags = {corner in filled_corners for corner in corners}
        if flags == {True}:
            face = frozenset(walk)
            if n != 3 or face in seen_triangles or not K.is_face(face):
                raise PlanarityDisagreementError(f"Filled face {walk} is not a triangle of the complex")
            seen_triangles.add(face)
            filled.add(index)
        elif len(flags) > 1:
            raise PlanarityDisagreementError(f"Face {walk} is partly filled")
    if len(seen_triangles) != len(K.triangles()):
        raise PlanarityDisagreementError("Some triangle is not a face of the embedding")
    return ComplexEmbedding(system, faces, filled, hub)


def nonplanarity_witness(K):
    """Why K does not embed in the 2-sphere, or None when it does."""
    if K.is_empty():
        return None
    witness = _precheck(K)
    if witness is not None:
        return witness
    if _embed(K) is None:
        return PlanarityWitness(PlanarityFailure.AUGMENTED_GRAPH_NONPLANAR, K.vertices)
    return None


def is_planar_complex(K):
    """Whether the complex embeds in the 2-sphere."""
    if isinstance(K, LabelledNerve):
        K = K.complex
    witness = nonplanarity_witness(K)
    planar = witness is None
    if witness is not None:
        logger.debug("Nonplanar complex: %s at %s", witness.reason.value, witness.vertices)
    if config.planarity_crosscheck() and len(K.vertices) <= config.oracle_max_vertices():
        if planarity_oracle_small(K) != planar:
            raise PlanarityDisagreementError(f"Planarity test and oracle disagree on {K!r}")
    return planar


def _candidate_rotations(K, v):
    neighbors = K.neighbors(v)
    if len(neighbors) <= 2:
        return [neighbors]
    pairs = [tuple(face - {v}) for face in K.triangles() if v in face]
    candidates = []
    for rest in permutations(neighbors[1:]):
        order = (neighbors[0], *rest)
        position = {u: i for i, u in enumerate(order)}
        n = len(order)
        if all((position[a] - position[b]) % n in (1, n - 1) for a, b in pairs):
            candidates.append(order)
    return candidates


def _oracle_component(K, need_open_face):
    edges = K.edges()
    if not edges:
        return True
    vertices = K.vertices
    if len(vertices) >= 3 and len(edges) > 3 * len(vertices) - 6:
        return False
    triangles = set(K.triangles())
    choices = [_candidate_rotations(K, v) for v in vertices]
    if any(not c for c in choices):
        return False
    for choice in product(*choices):
        system = RotationSystem(dict(zip(vertices, choice)))
        faces = system.faces()
        if len(vertices) - len(edges) + len(faces) != 2:
            continue
        triangular = {frozenset(f) for f in faces if len(f) == 3}
        if not triangles <= triangular:
            continue
        if need_open_face and len(faces) == len(triangles):
            continue
        return True
    return False


def planarity_oracle_small(K, max_vertices=None):
    """Brute-force planarity over all rotation systems; only for small complexes."""
    if isinstance(K, LabelledNerve):
        K = K.complex
    limit = max_vertices if max_vertices is not None else config.oracle_max_vertices()
    if len(K.vertices) > limit:
        raise SizeGuardError(f"Oracle limited to {limit} vertices, got {len(K.vertices)}")
    if K.dimension >= 3:
        return False
    parts = components(K)
    for part in parts:
        if not _oracle_component(full_subcomplex(K, part), len(parts) > 1):
            return False
    return True


def is_full_in(N, L):
    """Whether L is the full subcomplex of N on L's vertices."""
    restricted = full_subcomplex(N, L.vertices)
    return set(restricted.maximal_faces) == set(L.maximal_faces)


def is_flag_relative_to(N, L):
    """Whether every clique of N meeting L in a face of L spans a face of N."""
    members = set(L.vertices)
    for clique in nx.enumerate_all_cliques(N.one_skeleton()):
        if len(clique) < 3:
            continue
        if L.is_face(set(clique) & members) and not N.is_face(clique):
            return False
    return True


def _coneable(K, walk, hub):
    if hub in walk or len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    members = frozenset(walk)
    chords = [e for e in K.edges() if e <= members]
    if len(chords) != len(walk):
        return False
    return not (len(walk) == 3 and K.is_face(members))


def _ring(walk, names):
    """Triangles of an annulus and a disc capping a face walk."""
    k = len(walk)
    a = [next(names) for _ in range(k)]
    b = [next(names) for _ in range(k)]
    centre = next(names)
    triangles = []
    for i in range(k):
        w, w_next, a_next = walk[i], walk[(i + 1) % k], a[(i + 1) % k]
        triangles += [
            (w, w_next, a[i]),
            (a[i], w_next, b[i]),
            (b[i], w_next, a_next),
            (centre, a[i], b[i]),
            (centre, b[i], a_next),
        ]
    return [*a, *b, centre], triangles


def sphere_completion(L):
    """Embed a planar nerve L as a full, relatively flag subcomplex of a sphere triangulation.

    New edges are labelled 2. Open faces bounded by an induced cycle are coned
    off; every other open face is capped by a ring of new triangles.
    """
    K = L.complex
    if not is_planar_complex(K):
        raise SphereCompletionError("Only planar nerves have a sphere completion")
    if is_sphere_triangulation(K):
        raise SphereCompletionError("The nerve already triangulates the sphere")

    embedding = _embed(K, hub_for_edgeless=True)
    if embedding is None:
        raise SphereCompletionError("Planar nerve without an embedding")
    names = _fresh_names(set(K.vertices) | {embedding.hub}, "n")
    vertices = list(K.vertices)
    if embedding.hub is not None:
        vertices.append(embedding.hub)
    triangles = [tuple(t) for t in K.triangles()]
    extra_edges = []
    if embedding.hub is not None:
        extra_edges = [(embedding.hub, v) for v in embedding.rotation.rotation[embedding.hub]]

    for walk in embedding.open_faces():
        if _coneable(K, walk, embedding.hub):
            apex = next(names)
            vertices.append(apex)
            triangles += [(apex, walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]
        else:
            added, capping = _ring(walk, names)
            vertices += added
            triangles += capping

    completed = SimplicialComplex(vertices, triangles + extra_edges + [tuple(e) for e in K.edges()])
    labels = {edge: L.labels.get(edge, 2) for edge in completed.edges()}
    result = LabelledNerve(completed, labels)

    if not is_sphere_triangulation(completed):
        raise SphereCompletionError("Completion is not a sphere triangulation")
    if not is_full_in(completed, K):
        raise SphereCompletionError("Nerve is not a full subcomplex of its completion")
    if not is_flag_relative_to(completed, K):
        raise SphereCompletionError("Completion is not flag relative to the nerve")
    logger.debug("Sphere completion added %d vertices", len(vertices) - len(K.vertices))
    return result


def completion_system(N):
    """Coxeter matrix whose nerve is the labelled completion N."""
    return N.matrix()
