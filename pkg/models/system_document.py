from models.coxeter_matrix import CoxeterMatrix, format_label, parse_label


class SystemDocument:
    """Coxeter system document model class.

    Either `relations` (general form) or `racg_edges` (right-angled form) is
    used; unlisted pairs have exponent infinity.
    """

    def __init__(self, name=None, generators=(), relations=(), racg_edges=None):
        self.name = name
        self.generators = list(generators)
        self.relations = [(s, t, parse_label(m)) for s, t, m in relations]
        self.racg_edges = list(racg_edges) if racg_edges is not None else None

    def matrix(self):
        """Build the Coxeter matrix the document describes."""
        if self.racg_edges is not None:
            return CoxeterMatrix.right_angled(self.generators, self.racg_edges)
        return CoxeterMatrix(self.generators, {frozenset((s, t)): m for s, t, m in self.relations})

    def to_dict(self):
        return {
            "name": self.name,
            "generators": list(self.generators),
            "relations": [[s, t, format_label(m)] for s, t, m in self.relations],
            "racg_edges": [list(e) for e in self.racg_edges] if self.racg_edges is not None else None,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data.get("name"),
            data.get("generators", []),
            data.get("relations", []),
            data.get("racg_edges"),
        )
