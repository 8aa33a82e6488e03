"""Named right-angled Coxeter systems used as a test corpus."""
from models.coxeter_matrix import CoxeterMatrix
from utils.errors import CarpetError, FamilyError

_families = {}


def register_family(name, minimum=None):
    """Register a family builder; `minimum` is the smallest accepted n (None: no n)."""
    def decorator(builder):
        _families[name] = (builder, minimum)
        return builder
    return decorator


def list_families():
    return list(_families.keys())


def _rim(prefix, n):
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _ring(vertices):
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


@register_family("cycle", minimum=3)
def cycle(n):
    rim = _rim("v", n)
    return rim, _ring(rim)


@register_family("wheel", minimum=3)
def wheel(n):
    rim = _rim("v", n)
    return ["c", *rim], [("c", v) for v in rim] + _ring(rim)


@register_family("simplex", minimum=1)
def simplex(n):
    vertices = _rim("s", n)
    return vertices, [(s, t) for i, s in enumerate(vertices) for t in vertices[i + 1:]]


@register_family("antiprism", minimum=3)
def antiprism(n):
    top, bottom = _rim("t", n), _rim("b", n)
    edges = _ring(top) + _ring(bottom)
    edges += [(top[i], bottom[i]) for i in range(n)]
    edges += [(top[i], bottom[(i + 1) % n]) for i in range(n)]
    return top + bottom, edges


@register_family("bipyramid", minimum=3)
def bipyramid(n):
    rim = _rim("v", n)
    return ["p", "q", *rim], [(pole, v) for pole in ("p", "q") for v in rim] + _ring(rim)


@register_family("octahedron")
def octahedron():
    vertices = ["x1", "x2", "y1", "y2", "z1", "z2"]
    edges = [(s, t) for i, s in enumerate(vertices) for t in vertices[i + 1:] if s[0] != t[0]]
    return vertices, edges


def make_family(name, n=None, overrides=()):
    """Build a named right-angled system, then apply (s, t, m) overrides."""
    if name not in _families:
        raise FamilyError(f"Unknown family '{name}'; known: {', '.join(list_families())}")
    builder, minimum = _families[name]
    if minimum is None:
        if n is not None:
            raise FamilyError(f"Family '{name}' takes no size parameter")
        vertices, edges = builder()
    else:
        if n is None or isinstance(n, bool) or not isinstance(n, int) or n < minimum:
            raise FamilyError(f"Family '{name}' needs an integer n >= {minimum}, got {n!r}")
        vertices, edges = builder(n)
    M = CoxeterMatrix.right_angled(vertices, edges)
    if overrides:
        try:
            M = M.with_labels(overrides)
        except CarpetError as error:
            raise FamilyError(f"Invalid override for '{name}': {error}") from error
    return M
