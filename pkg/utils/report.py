"""Rendering verdicts as json documents or human-readable text."""
import json

from models.verdict import FLAG_FIELDS, Verdict
from models.witness import WitnessKind
from utils.errors import CarpetError, ReportError

FORMATS = ("human", "json")

CRITERIA = {
    "hyperbolic": "W is word-hyperbolic (no affine subset of rank >= 3, no commuting pair of infinite subsets)",
    "nerve_planar": "the nerve embeds in the 2-sphere",
    "connected_1ended": "W is one-ended, so its boundary is connected",
    "boundary_planar": "the nerve completes to a sphere triangulation, so the boundary is planar",
    "dim_one": "vcd(W) = 2, so the boundary is 1-dimensional",
    "unseparable": "no separating simplex, nonadjacent pair or labelled suspension",
    "wheel": "the nerve is a labelled wheel",
    "simplex": "the nerve is a simplex (W is finite)",
    "circle_tri": "the nerve triangulates the circle",
    "sphere_tri": "the nerve triangulates the 2-sphere",
    "ends": "number of ends of W",
    "vcd": "virtual cohomological dimension of W",
}


def _vertices(values):
    return "{" + ", ".join(values) + "}"


def describe_witness(witness):
    """One line describing a witness."""
    kind = witness.kind
    if kind is WitnessKind.AFFINE_SUBSET:
        return f"affine special subgroup on {_vertices(witness.parts[0])}"
    if kind is WitnessKind.PRODUCT_OF_INFINITES:
        first, second = witness.parts
        return f"commuting infinite special subgroups on {_vertices(first)} and {_vertices(second)}"
    if kind is WitnessKind.EMPTY_SQUARE:
        return "empty square " + " - ".join(witness.parts[0])
    if kind is WitnessKind.NONPLANAR:
        return f"nonplanar nerve ({witness.reason.value.lower()}) at {_vertices(witness.vertices)}"
    if kind in (WitnessKind.SIMPLEX, WitnessKind.NONADJACENT_PAIR, WitnessKind.LABELLED_SUSPENSION, WitnessKind.DISCONNECTED):
        parts = " | ".join(_vertices(c) for c in witness.components)
        if kind is WitnessKind.DISCONNECTED:
            return f"disconnected nerve: {parts}"
        label = kind.value.lower().replace("_", " ")
        text = f"separating {label} {_vertices(witness.removed)} leaves {parts}"
        if witness.suspension is not None:
            text += f" (poles {_vertices(witness.suspension.poles)}, base {_vertices(witness.suspension.base)})"
        return text
    if kind is WitnessKind.LABELLED_WHEEL:
        return f"labelled wheel with apex {witness.apex}"
    return f"{kind.value.lower().replace('_', ' ')} on {_vertices(witness.vertices)}"


def _flag(value):
    if value is None:
        return "n/a"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


def _human(verdict):
    lines = [f"boundary: {verdict.boundary.value} (mode {verdict.mode.value})"]
    if verdict.conjectural:
        lines.append("conjectural: yes")
    lines.append("witnesses:")
    lines.extend(f"  - {describe_witness(w)}" for w in verdict.witnesses)
    if not verdict.witnesses:
        lines.append("  (none)")
    lines.append("diagnostics:")
    values = verdict.diagnostics.to_dict()
    width = max(len(name) for name in values)
    for name in (*FLAG_FIELDS, "ends", "vcd"):
        lines.append(f"  {name:<{width}}  {_flag(values[name]):<4}  {CRITERIA[name]}")
    if verdict.notes:
        lines.append("notes:")
        lines.extend(f"  - {note}" for note in verdict.notes)
    return "\n".join(lines) + "\n"


def emit_report(verdict, format="json"):
    """Render a verdict; json keys come in a fixed order."""
    if format == "json":
        return json.dumps(verdict.to_dict(), indent=2) + "\n"
    if format == "human":
        return _human(verdict)
    raise ReportError(f"Unknown report format '{format}'; use one of {', '.join(FORMATS)}")


def parse_report(text):
    """Rebuild a Verdict from a json report."""
    try:
        return Verdict.from_dict(json.loads(text))
    except (ValueError, KeyError, TypeError) as error:
        if isinstance(error, CarpetError):
            raise
        raise ReportError(f"Invalid report: {error}") from error
