import math
from enum import Enum

from models.witness import Witness
from utils.errors import ConsistencyError


class Boundary(Enum):
    SIERPINSKI_CARPET = "SIERPINSKI_CARPET"
    CIRCLE = "CIRCLE"
    SPHERE = "SPHERE"
    EMPTY = "EMPTY"
    NOT_CARPET = "NOT_CARPET"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


class Mode(Enum):
    THEOREM1 = "THEOREM1"
    THEOREM2 = "THEOREM2"
    CONJECTURAL = "CONJECTURAL"


FLAG_FIELDS = (
    "hyperbolic",
    "nerve_planar",
    "connected_1ended",
    "boundary_planar",
    "dim_one",
    "unseparable",
    "wheel",
    "simplex",
    "circle_tri",
    "sphere_tri",
)


class Diagnostics:
    """Diagnostics model class.

    Each flag is True, False or None (not evaluated). `ends` is 0, 1, 2 or
    math.inf; `vcd` is an int or None.
    """

    def __init__(self, **values):
        unknown = set(values) - set(FLAG_FIELDS) - {"ends", "vcd"}
        if unknown:
            raise TypeError(f"Unknown diagnostics: {sorted(unknown)}")
        for name in FLAG_FIELDS:
            setattr(self, name, values.get(name))
        self.ends = values.get("ends")
        self.vcd = values.get("vcd")

    def to_dict(self):
        data = {name: getattr(self, name) for name in FLAG_FIELDS}
        data["ends"] = "inf" if self.ends == math.inf else self.ends
        data["vcd"] = self.vcd
        return data

    @classmethod
    def from_dict(cls, data):
        values = {name: data.get(name) for name in FLAG_FIELDS}
        ends = data.get("ends")
        values["ends"] = math.inf if ends == "inf" else ends
        values["vcd"] = data.get("vcd")
        return cls(**values)

    def __eq__(self, other):
        if not isinstance(other, Diagnostics):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"Diagnostics({self.to_dict()!r})"


class Verdict:
    """Verdict model class."""

    def __init__(self, boundary, mode, witnesses=(), diagnostics=None, notes=(), conjectural=False):
        self.boundary = Boundary(boundary)
        self.mode = Mode(mode)
        self.witnesses = list(witnesses)
        self.diagnostics = diagnostics or Diagnostics()
        self.notes = list(notes)
        self.conjectural = bool(conjectural)

    @property
    def is_carpet(self):
        return self.boundary is Boundary.SIERPINSKI_CARPET

    def check_invariants(self):
        """Raise ConsistencyError if a carpet verdict lacks its required diagnostics."""
        if not self.is_carpet:
            return
        d = self.diagnostics
        required = [d.nerve_planar, d.unseparable]
        if self.mode is not Mode.CONJECTURAL:
            required.append(d.hyperbolic)
        if not all(flag is True for flag in required):
            raise ConsistencyError("Carpet verdict without planarity, unseparability or hyperbolicity")
        if any(flag is not False for flag in (d.wheel, d.simplex, d.circle_tri, d.sphere_tri)):
            raise ConsistencyError("Carpet verdict on an excluded form")

    def to_dict(self):
        return {
            "boundary": self.boundary.value,
            "mode": self.mode.value,
            "conjectural": self.conjectural,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "diagnostics": self.diagnostics.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["boundary"],
            data["mode"],
            [Witness.from_dict(w) for w in data.get("witnesses", [])],
            Diagnostics.from_dict(data.get("diagnostics", {})),
            data.get("notes", []),
            data.get("conjectural", False),
        )

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"Verdict({self.boundary.value}, {self.mode.value})"
