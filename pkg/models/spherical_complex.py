from fractions import Fraction

from models.simplicial_complex import SimplicialComplex
from utils.errors import ComplexError


class SphericalComplex:
    """Piecewise spherical complex model class.

    Edge lengths are exact rational multiples of pi strictly between 0 and 1.
    """

    def __init__(self, complex, edge_lengths):
        """Initialize a spherical complex."""
        self.complex = complex
        self.edge_lengths = {}
        for edge, length in edge_lengths.items():
            edge = frozenset(edge)
            length = Fraction(length)
            if len(edge) != 2 or not complex.is_face(edge):
                raise ComplexError(f"Length given for a non-edge: {sorted(edge)}")
            if not 0 < length < 1:
                raise ComplexError(f"Edge length must lie in (0, pi), got {length}*pi")
            self.edge_lengths[edge] = length
        missing = [e for e in complex.edges() if e not in self.edge_lengths]
        if missing:
            raise ComplexError(f"Edge without a length: {list(complex.ordered(missing[0]))}")

    @property
    def vertices(self):
        return self.complex.vertices

    def length(self, s, t):
        """Length of edge {s, t} as a multiple of pi."""
        return self.edge_lengths[frozenset((s, t))]

    def __eq__(self, other):
        if not isinstance(other, SphericalComplex):
            return NotImplemented
        return self.complex == other.complex and self.edge_lengths == other.edge_lengths

    def __hash__(self):
        return hash((self.complex, frozenset(self.edge_lengths.items())))

    def to_dict(self):
        edges = sorted(self.edge_lengths, key=self.complex.sort_key)
        return {
            "complex": self.complex.to_dict(),
            "edge_lengths": [[*self.complex.ordered(e), str(self.edge_lengths[e])] for e in edges],
        }

    @classmethod
    def from_dict(cls, data):
        complex = SimplicialComplex.from_dict(data["complex"])
        lengths = {frozenset((s, t)): Fraction(x) for s, t, x in data["edge_lengths"]}
        return cls(complex, lengths)
