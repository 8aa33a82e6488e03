from enum import Enum

from models.labelled_nerve import LabelledSuspensionWitness


class WitnessKind(Enum):
    AFFINE_SUBSET = "AFFINE_SUBSET"
    PRODUCT_OF_INFINITES = "PRODUCT_OF_INFINITES"
    EMPTY_SQUARE = "EMPTY_SQUARE"
    SIMPLEX = "SIMPLEX"
    NONADJACENT_PAIR = "NONADJACENT_PAIR"
    LABELLED_SUSPENSION = "LABELLED_SUSPENSION"
    DISCONNECTED = "DISCONNECTED"
    SIMPLEX_NERVE = "SIMPLEX_NERVE"
    CIRCLE_TRIANGULATION = "CIRCLE_TRIANGULATION"
    LABELLED_WHEEL = "LABELLED_WHEEL"
    SPHERE_TRIANGULATION = "SPHERE_TRIANGULATION"
    NONPLANAR = "NONPLANAR"


class PlanarityFailure(Enum):
    HIGH_DIMENSIONAL_FACE = "HIGH_DIMENSIONAL_FACE"
    EDGE_IN_THREE_TRIANGLES = "EDGE_IN_THREE_TRIANGLES"
    LINK_NOT_PLANAR = "LINK_NOT_PLANAR"
    CLOSED_COMPONENT = "CLOSED_COMPONENT"
    AUGMENTED_GRAPH_NONPLANAR = "AUGMENTED_GRAPH_NONPLANAR"


_witness_classes = {}


def _register(*kinds):
    def decorator(cls):
        for kind in kinds:
            _witness_classes[kind] = cls
        return cls
    return decorator


class Witness:
    """Base witness model class."""

    def __init__(self, kind):
        self.kind = WitnessKind(kind)

    def to_dict(self):
        return {"kind": self.kind.value}

    @classmethod
    def from_dict(cls, data):
        """Create the witness subclass matching data['kind']."""
        kind = WitnessKind(data["kind"])
        return _witness_classes[kind]._from_dict(kind, data)

    def __eq__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self.to_dict()))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_dict()!r})"


@_register(WitnessKind.AFFINE_SUBSET, WitnessKind.PRODUCT_OF_INFINITES, WitnessKind.EMPTY_SQUARE)
class HyperbolicityWitness(Witness):
    """Hyperbolicity witness model class.

    AFFINE_SUBSET carries one subset, PRODUCT_OF_INFINITES two disjoint subsets,
    EMPTY_SQUARE the four vertices of the square in cyclic order.
    """

    def __init__(self, kind, *parts):
        super().__init__(kind)
        self.parts = tuple(tuple(p) for p in parts)

    @classmethod
    def affine_subset(cls, vertices):
        return cls(WitnessKind.AFFINE_SUBSET, vertices)

    @classmethod
    def product(cls, first, second):
        return cls(WitnessKind.PRODUCT_OF_INFINITES, first, second)

    @classmethod
    def empty_square(cls, cycle):
        return cls(WitnessKind.EMPTY_SQUARE, cycle)

    def to_dict(self):
        data = super().to_dict()
        if self.kind is WitnessKind.AFFINE_SUBSET:
            data["vertices"] = list(self.parts[0])
        elif self.kind is WitnessKind.PRODUCT_OF_INFINITES:
            data["first"] = list(self.parts[0])
            data["second"] = list(self.parts[1])
        else:
            data["cycle"] = list(self.parts[0])
        return data

    @classmethod
    def _from_dict(cls, kind, data):
        if kind is WitnessKind.AFFINE_SUBSET:
            return cls(kind, data["vertices"])
        if kind is WitnessKind.PRODUCT_OF_INFINITES:
            return cls(kind, data["first"], data["second"])
        return cls(kind, data["cycle"])


@_register(
    WitnessKind.SIMPLEX,
    WitnessKind.NONADJACENT_PAIR,
    WitnessKind.LABELLED_SUSPENSION,
    WitnessKind.DISCONNECTED,
)
class SeparationWitness(Witness):
    """Separation witness model class."""

    def __init__(self, kind, removed, components, suspension=None):
        super().__init__(kind)
        self.removed = tuple(removed)
        self.components = tuple(tuple(c) for c in components)
        self.suspension = suspension

    def to_dict(self):
        data = super().to_dict()
        data["removed"] = list(self.removed)
        data["components"] = [list(c) for c in self.components]
        data["suspension"] = self.suspension.to_dict() if self.suspension else None
        return data

    @classmethod
    def _from_dict(cls, kind, data):
        suspension = data.get("suspension")
        return cls(
            kind,
            data["removed"],
            data["components"],
            LabelledSuspensionWitness.from_dict(suspension) if suspension else None,
        )


@_register(
    WitnessKind.SIMPLEX_NERVE,
    WitnessKind.CIRCLE_TRIANGULATION,
    WitnessKind.LABELLED_WHEEL,
    WitnessKind.SPHERE_TRIANGULATION,
)
class FormWitness(Witness):
    """Excluded-form witness model class."""

    def __init__(self, kind, vertices, apex=None):
        super().__init__(kind)
        self.vertices = tuple(vertices)
        self.apex = apex

    def to_dict(self):
        data = super().to_dict()
        data["vertices"] = list(self.vertices)
        if self.kind is WitnessKind.LABELLED_WHEEL:
            data["apex"] = self.apex
        return data

    @classmethod
    def _from_dict(cls, kind, data):
        return cls(kind, data["vertices"], data.get("apex"))


@_register(WitnessKind.NONPLANAR)
class PlanarityWitness(Witness):
    """Nonplanarity witness model class."""

    def __init__(self, reason, vertices):
        super().__init__(WitnessKind.NONPLANAR)
        self.reason = PlanarityFailure(reason)
        self.vertices = tuple(vertices)

    def to_dict(self):
        data = super().to_dict()
        data["reason"] = self.reason.value
        data["vertices"] = list(self.vertices)
        return data

    @classmethod
    def _from_dict(cls, kind, data):
        return cls(data["reason"], data["vertices"])
