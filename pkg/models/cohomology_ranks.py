class CohomologyRanks:
    """Reduced cohomology ranks model class (degrees -1 through 2)."""

    DEGREES = (-1, 0, 1, 2)

    def __init__(self, ranks, coefficients="QQ"):
        ranks = tuple(int(r) for r in ranks)
        if len(ranks) != len(self.DEGREES) or any(r < 0 for r in ranks):
            raise ValueError("Expected four nonnegative ranks for degrees -1..2")
        self.ranks = ranks
        self.coefficients = coefficients

    def rank(self, degree):
        """Rank of reduced H^degree (zero outside -1..2)."""
        if degree not in self.DEGREES:
            return 0
        return self.ranks[degree + 1]

    def nonzero_degrees(self):
        return [d for d in self.DEGREES if self.rank(d)]

    def __eq__(self, other):
        if isinstance(other, CohomologyRanks):
            return self.ranks == other.ranks
        if isinstance(other, (tuple, list)):
            return self.ranks == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.ranks)

    def __repr__(self):
        return f"CohomologyRanks({list(self.ranks)}, {self.coefficients})"

    def to_dict(self):
        return {"ranks": list(self.ranks), "coefficients": self.coefficients}

    @classmethod
    def from_dict(cls, data):
        return cls(data["ranks"], data.get("coefficients", "QQ"))
