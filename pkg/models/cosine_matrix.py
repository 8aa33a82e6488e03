from enum import Enum
from fractions import Fraction

import sympy


class DefinitenessClass(Enum):
    POSITIVE_DEFINITE = "POSITIVE_DEFINITE"
    PSD_SINGULAR = "PSD_SINGULAR"
    INDEFINITE = "INDEFINITE"


class Definiteness:
    """Definiteness model class."""

    def __init__(self, kind, nullity=0):
        self.kind = DefinitenessClass(kind)
        self.nullity = nullity

    @property
    def is_positive_definite(self):
        return self.kind is DefinitenessClass.POSITIVE_DEFINITE

    def __eq__(self, other):
        if not isinstance(other, Definiteness):
            return NotImplemented
        return self.kind == other.kind and self.nullity == other.nullity

    def __hash__(self):
        return hash((self.kind, self.nullity))

    def __repr__(self):
        return f"Definiteness({self.kind.value}, nullity={self.nullity})"

    def to_dict(self):
        return {"class": self.kind.value, "nullity": self.nullity}

    @classmethod
    def from_dict(cls, data):
        return cls(data["class"], data.get("nullity", 0))


class CosineMatrix:
    """Cosine matrix model class.

    Entry (i, j) is cos(angle_ij * pi), where every angle is an exact rational
    multiple of pi. The diagonal angle is 0.
    """

    def __init__(self, subset, angles):
        """Initialize a cosine matrix from its generator list and angle table."""
        self.subset = tuple(subset)
        self.angles = tuple(tuple(Fraction(a) for a in row) for row in angles)
        n = len(self.subset)
        if len(self.angles) != n or any(len(row) != n for row in self.angles):
            raise ValueError("Angle table must be square and match the subset")
        for i in range(n):
            if self.angles[i][i] != 0:
                raise ValueError("Diagonal angles must be 0")
            for j in range(i):
                if self.angles[i][j] != self.angles[j][i]:
                    raise ValueError("Angle table must be symmetric")

    @property
    def size(self):
        return len(self.subset)

    def entry(self, i, j):
        """Exact value of entry (i, j) as a sympy expression."""
        a = self.angles[i][j]
        return sympy.cos(sympy.Rational(a.numerator, a.denominator) * sympy.pi)

    @property
    def entries(self):
        return sympy.Matrix(self.size, self.size, lambda i, j: self.entry(i, j))

    def __eq__(self, other):
        if not isinstance(other, CosineMatrix):
            return NotImplemented
        return self.subset == other.subset and self.angles == other.angles

    def __hash__(self):
        return hash((self.subset, self.angles))

    def __repr__(self):
        return f"CosineMatrix({list(self.subset)!r})"
