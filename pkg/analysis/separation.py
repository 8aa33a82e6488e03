"""Separating simplices, nonadjacent pairs and labelled suspensions of a nerve."""
import logging
from itertools import combinations

from analysis.complexes import components, delete_vertices
from models.labelled_nerve import LabelledSuspensionWitness
from models.witness import SeparationWitness, WitnessKind

logger = logging.getLogger(__name__)


def separation_components(K, removed):
    """Components left after deleting `removed`, or None when they are fewer than two."""
    rest = delete_vertices(K, removed)
    if rest.is_empty():
        return None
    parts = components(rest)
    return parts if len(parts) >= 2 else None


def _sorted(K, witnesses):
    return sorted(witnesses, key=lambda w: K.sort_key(w.removed))


def separating_simplices(L):
    """Faces whose deletion disconnects the nerve."""
    K = L.complex
    found = []
    for face in K.faces():
        parts = separation_components(K, face)
        if parts:
            found.append(SeparationWitness(WitnessKind.SIMPLEX, K.ordered(face), parts))
    return _sorted(K, found)


def nonadjacent_pairs(K):
    for s, t in combinations(K.vertices, 2):
        if not K.is_face((s, t)):
            yield s, t


def separating_nonadjacent_pairs(L):
    """Pairs of nonadjacent vertices whose deletion disconnects the nerve."""
    K = L.complex
    found = []
    for pair in nonadjacent_pairs(K):
        parts = separation_components(K, pair)
        if parts:
            found.append(SeparationWitness(WitnessKind.NONADJACENT_PAIR, pair, parts))
    return _sorted(K, found)


def labelled_suspensions(L):
    """All labelled suspensions {s, t} * base with a nonempty simplex base."""
    K = L.complex
    found = []
    for s, t in nonadjacent_pairs(K):
        for base in K.faces():
            if s in base or t in base:
                continue
            if not (K.is_face(base | {s}) and K.is_face(base | {t})):
                continue
            if all(L.label(pole, x) == 2 for pole in (s, t) for x in base):
                found.append(LabelledSuspensionWitness((s, t), K.ordered(base)))
    return found


def separating_suspensions(L):
    K = L.complex
    found = []
    for suspension in labelled_suspensions(L):
        removed = K.ordered(suspension.vertex_set)
        parts = separation_components(K, removed)
        if parts:
            found.append(SeparationWitness(WitnessKind.LABELLED_SUSPENSION, removed, parts, suspension))
    return _sorted(K, found)


def is_unseparable(L):
    """Return (unseparable, first witness) for a labelled nerve."""
    K = L.complex
    parts = components(K)
    if len(parts) > 1:
        return False, SeparationWitness(WitnessKind.DISCONNECTED, (), parts)
    for enumerate_witnesses in (separating_simplices, separating_nonadjacent_pairs, separating_suspensions):
        witnesses = enumerate_witnesses(L)
        if witnesses:
            logger.debug("%d %s witnesses", len(witnesses), witnesses[0].kind.value)
            return False, witnesses[0]
    return True, None


def verify_separation_witness(L, witness):
    """Re-derive a separation witness from the nerve."""
    K = L.complex
    if witness.kind is WitnessKind.DISCONNECTED:
        return not witness.removed and tuple(components(K)) == witness.components
    removed = frozenset(witness.removed)
    if witness.kind is WitnessKind.SIMPLEX and not K.is_face(removed):
        return False
    if witness.kind is WitnessKind.NONADJACENT_PAIR and (len(removed) != 2 or K.is_face(removed)):
        return False
    if witness.kind is WitnessKind.LABELLED_SUSPENSION:
        suspension = witness.suspension
        if suspension is None or suspension.vertex_set != removed or not suspension.verify(L):
            return False
    parts = separation_components(K, removed)
    return parts is not None and tuple(parts) == witness.components
