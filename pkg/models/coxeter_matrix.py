import math

from utils.errors import CoxeterMatrixError, UnknownVertexError

INF = math.inf


def format_label(m):
    """Render an exponent, using 'inf' for infinity."""
    return "inf" if m == INF else str(int(m))


def parse_label(value):
    """Parse an exponent given as an int or as 'inf'."""
    if isinstance(value, str):
        if value.strip().lower() == "inf":
            return INF
        value = int(value.strip())
    if isinstance(value, float) and math.isinf(value):
        return INF
    if isinstance(value, bool) or int(value) != value:
        raise CoxeterMatrixError(f"Invalid exponent: {value!r}")
    return int(value)


class CoxeterMatrix:
    """Coxeter matrix model class.

    Holds the ordered generator list and the exponent of every unordered pair.
    Pairs that are not given explicitly have exponent infinity.
    """

    def __init__(self, generators, relations=None):
        """Initialize a Coxeter matrix."""
        generators = tuple(str(s) for s in generators)
        if not generators:
            raise CoxeterMatrixError("A Coxeter system needs at least one generator")
        if len(set(generators)) != len(generators):
            seen = set()
            duplicate = next(s for s in generators if s in seen or seen.add(s))
            raise CoxeterMatrixError(f"Duplicate generator: {duplicate}")

        self.generators = generators
        self._index = {s: i for i, s in enumerate(generators)}
        self._m = {}
        self._hash = None
        for pair, m in (relations or {}).items():
            pair = tuple(pair)
            if len(pair) == 1:
                raise CoxeterMatrixError(f"Diagonal relation on {pair[0]}")
            s, t = pair
            self._set(s, t, m)

    def _set(self, s, t, m):
        if s not in self._index or t not in self._index:
            raise UnknownVertexError([v for v in (s, t) if v not in self._index])
        if s == t:
            raise CoxeterMatrixError(f"Diagonal relation on {s}")
        m = parse_label(m)
        if m < 2:
            raise CoxeterMatrixError(f"Exponent of ({s}, {t}) must be at least 2, got {m}")
        if m == INF:
            self._m.pop(frozenset((s, t)), None)
        else:
            self._m[frozenset((s, t))] = m

    def m(self, s, t):
        """Get the exponent m_st."""
        if s == t:
            if s not in self._index:
                raise UnknownVertexError([s])
            return 1
        key = frozenset((s, t))
        if key in self._m:
            return self._m[key]
        if s not in self._index or t not in self._index:
            raise UnknownVertexError([v for v in (s, t) if v not in self._index])
        return INF

    def index(self, s):
        """Position of a generator in the declared order."""
        try:
            return self._index[s]
        except KeyError:
            raise UnknownVertexError([s]) from None

    def ordered(self, subset):
        """Return the members of a generator subset in declared order."""
        return tuple(sorted(subset, key=self.index))

    def sort_key(self, subset):
        """Lexicographic key of a generator subset in declared order."""
        return tuple(sorted(self.index(s) for s in subset))

    def pairs(self):
        """Iterate (s, t, m) over unordered pairs in declared order."""
        for i, s in enumerate(self.generators):
            for t in self.generators[i + 1:]:
                yield s, t, self.m(s, t)

    def finite_pairs(self):
        """Iterate (s, t, m) over pairs with finite exponent."""
        return ((s, t, m) for s, t, m in self.pairs() if m != INF)

    def is_right_angled(self):
        """Whether every off-diagonal exponent is 2 or infinity."""
        return all(m in (2, INF) for m in self._m.values())

    def restricted(self, subset):
        """Return the Coxeter matrix of the special subgroup on a subset."""
        subset = self.ordered(subset)
        keep = set(subset)
        relations = {k: m for k, m in self._m.items() if k <= keep}
        return CoxeterMatrix(subset, relations)

    def with_labels(self, overrides):
        """Return a copy with the given (s, t, m) exponents replaced."""
        relations = dict(self._m)
        copy = CoxeterMatrix(self.generators, relations)
        for s, t, m in overrides:
            copy._set(s, t, m)
        return copy

    @classmethod
    def right_angled(cls, vertices, edges):
        """Build the right-angled matrix of a graph (2 on edges, inf elsewhere)."""
        return cls(vertices, {frozenset(e): 2 for e in edges})

    def __eq__(self, other):
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.generators == other.generators and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.generators, frozenset(self._m.items())))
        return self._hash

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"CoxeterMatrix({list(self.generators)!r}, {len(self._m)} finite pairs)"

    def to_dict(self):
        """Convert the matrix to a dictionary."""
        return {
            "generators": list(self.generators),
            "relations": [[s, t, format_label(m)] for s, t, m in self.finite_pairs()],
        }

    @classmethod
    def from_dict(cls, data):
        """Create a matrix from a dictionary."""
        relations = {}
        for s, t, m in data.get("relations", []):
            relations[frozenset((s, t))] = parse_label(m)
        return cls(data["generators"], relations)
