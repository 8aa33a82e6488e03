from itertools import combinations

import networkx as nx

from utils.errors import ComplexError, UnknownVertexError


class SimplicialComplex:
    """Simplicial complex model class.

    The complex is stored by its inclusion-maximal faces over an ordered vertex
    list. Every ordering the complex hands out follows the vertex order.
    """

    def __init__(self, vertices, maximal_faces, allow_empty=False):
        """Initialize a complex from vertices and (not necessarily maximal) faces."""
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            seen = set()
            duplicate = next(v for v in vertices if v in seen or seen.add(v))
            raise ComplexError(f"Duplicate vertex symbol: {duplicate}")
        if not vertices and not allow_empty:
            raise ComplexError("The empty complex is not a valid input")

        self.vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}

        faces = set()
        for face in maximal_faces:
            face = frozenset(str(v) for v in face)
            unknown = [v for v in face if v not in self._index]
            if unknown:
                raise UnknownVertexError(sorted(unknown))
            if face:
                faces.add(face)

        kept = []
        for face in sorted(faces, key=len, reverse=True):
            if not any(face < other for other in kept):
                kept.append(face)
        covered = set().union(*kept) if kept else set()
        kept.extend(frozenset([v]) for v in vertices if v not in covered)

        self.maximal_faces = tuple(sorted(kept, key=self.sort_key))
        self._faces = None

    @classmethod
    def empty(cls):
        """The empty complex (only produced by deletions)."""
        return cls((), (), allow_empty=True)

    def index(self, v):
        """Position of a vertex in the vertex order."""
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError([v]) from None

    def ordered(self, vertex_set):
        """Return a vertex set as a tuple in vertex order."""
        return tuple(sorted(vertex_set, key=self.index))

    def sort_key(self, vertex_set):
        return tuple(sorted(self.index(v) for v in vertex_set))

    def check_vertices(self, vertex_set):
        """Raise if some member of vertex_set is not a vertex."""
        unknown = [v for v in vertex_set if v not in self._index]
        if unknown:
            raise UnknownVertexError(sorted(map(str, unknown)))

    def is_empty(self):
        return not self.vertices

    @property
    def dimension(self):
        if not self.maximal_faces:
            return -1
        return max(len(face) for face in self.maximal_faces) - 1

    def is_face(self, vertex_set):
        """Whether the vertex set spans a face (the empty set always does)."""
        vertex_set = frozenset(vertex_set)
        if not vertex_set:
            return True
        return any(vertex_set <= face for face in self.maximal_faces)

    def _face_table(self):
        if self._faces is None:
            found = set()
            for face in self.maximal_faces:
                for size in range(1, len(face) + 1):
                    found.update(frozenset(c) for c in combinations(face, size))
            self._faces = tuple(sorted(found, key=lambda f: (len(f), self.sort_key(f))))
        return self._faces

    def faces(self, dimension=None):
        """All nonempty faces ordered by size, then lexicographically."""
        if dimension is None:
            return self._face_table()
        return tuple(f for f in self._face_table() if len(f) == dimension + 1)

    def edges(self):
        return self.faces(1)

    def triangles(self):
        return self.faces(2)

    def neighbors(self, v):
        """Vertices joined to v by an edge, in vertex order."""
        self.check_vertices([v])
        found = set()
        for face in self.maximal_faces:
            if v in face:
                found.update(face)
        found.discard(v)
        return self.ordered(found)

    def one_skeleton(self):
        """The 1-skeleton as a networkx graph (nodes inserted in vertex order)."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(edge) for edge in self.edges())
        return graph

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and set(self.maximal_faces) == set(other.maximal_faces)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.maximal_faces)))

    def __repr__(self):
        faces = ", ".join("{" + ",".join(self.ordered(f)) + "}" for f in self.maximal_faces)
        return f"SimplicialComplex([{faces}])"

    def to_dict(self):
        """Convert the complex to a dictionary."""
        return {
            "vertices": list(self.vertices),
            "maximal_faces": [list(self.ordered(f)) for f in self.maximal_faces],
        }

    @classmethod
    def from_dict(cls, data):
        """Create a complex from a dictionary."""
        return cls(data["vertices"], data["maximal_faces"], allow_empty=not data["vertices"])
