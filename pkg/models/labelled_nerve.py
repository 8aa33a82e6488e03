from models.coxeter_matrix import CoxeterMatrix, INF
from models.simplicial_complex import SimplicialComplex
from utils.errors import ComplexError


class LabelledNerve:
    """Labelled nerve model class.

    A simplicial complex whose edges carry finite labels >= 2, optionally
    remembering the Coxeter matrix it came from.
    """

    def __init__(self, complex, labels, origin=None):
        """Initialize a labelled nerve and check the labels against the complex."""
        self.complex = complex
        self.origin = origin
        self.labels = {}
        for edge, m in labels.items():
            edge = frozenset(edge)
            if len(edge) != 2 or not complex.is_face(edge):
                raise ComplexError(f"Label given for a non-edge: {sorted(edge)}")
            if m == INF or int(m) != m or m < 2:
                raise ComplexError(f"Edge label must be a finite integer >= 2, got {m!r}")
            self.labels[edge] = int(m)

        missing = [e for e in complex.edges() if e not in self.labels]
        if missing:
            raise ComplexError(f"Edge without a label: {list(complex.ordered(missing[0]))}")

        if origin is not None:
            if tuple(origin.generators) != complex.vertices:
                raise ComplexError("Nerve vertices differ from the generators of its matrix")
            for s, t, m in origin.pairs():
                edge = frozenset((s, t))
                if (m != INF) != (edge in self.labels):
                    raise ComplexError(f"Edge {s}-{t} disagrees with m = {m}")
                if m != INF and self.labels[edge] != m:
                    raise ComplexError(f"Edge {s}-{t} labelled {self.labels[edge]}, m = {m}")

    @property
    def vertices(self):
        return self.complex.vertices

    def label(self, s, t):
        """Get the label of the edge {s, t}."""
        try:
            return self.labels[frozenset((s, t))]
        except KeyError:
            raise ComplexError(f"No edge between {s} and {t}") from None

    def is_right_angled(self):
        return all(m == 2 for m in self.labels.values())

    def matrix(self):
        """Coxeter matrix with the labels on edges and inf elsewhere."""
        return CoxeterMatrix(self.vertices, dict(self.labels))

    def __eq__(self, other):
        if not isinstance(other, LabelledNerve):
            return NotImplemented
        return self.complex == other.complex and self.labels == other.labels

    def __hash__(self):
        return hash((self.complex, frozenset(self.labels.items())))

    def __repr__(self):
        return f"LabelledNerve({self.complex!r})"

    def to_dict(self):
        """Convert the nerve to a dictionary."""
        edges = sorted(self.labels, key=self.complex.sort_key)
        return {
            "complex": self.complex.to_dict(),
            "labels": [[*self.complex.ordered(e), self.labels[e]] for e in edges],
            "origin": self.origin.to_dict() if self.origin is not None else None,
        }

    @classmethod
    def from_dict(cls, data):
        """Create a nerve from a dictionary."""
        complex = SimplicialComplex.from_dict(data["complex"])
        labels = {frozenset((s, t)): int(m) for s, t, m in data.get("labels", [])}
        origin = data.get("origin")
        return cls(complex, labels, CoxeterMatrix.from_dict(origin) if origin else None)


class LabelledSuspensionWitness:
    """Labelled suspension model class: poles {s, t} joined to a simplex base."""

    def __init__(self, poles, base):
        self.poles = tuple(poles)
        self.base = tuple(base)

    @property
    def vertex_set(self):
        return frozenset(self.poles) | frozenset(self.base)

    def verify(self, nerve):
        """Whether the suspension is valid in the given labelled nerve."""
        s, t = self.poles
        base = frozenset(self.base)
        complex = nerve.complex
        if not base or complex.is_face((s, t)):
            return False
        if not (complex.is_face(base | {s}) and complex.is_face(base | {t})):
            return False
        return all(nerve.label(pole, x) == 2 for pole in (s, t) for x in base)

    def __eq__(self, other):
        if not isinstance(other, LabelledSuspensionWitness):
            return NotImplemented
        return set(self.poles) == set(other.poles) and set(self.base) == set(other.base)

    def __hash__(self):
        return hash((frozenset(self.poles), frozenset(self.base)))

    def __repr__(self):
        return f"LabelledSuspensionWitness(poles={self.poles}, base={self.base})"

    def to_dict(self):
        return {"poles": list(self.poles), "base": list(self.base)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["poles"], data["base"])
