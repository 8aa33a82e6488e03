"""Entry points of the boundary decision procedures."""
import logging

from analysis.nerve_builder import racg_matrix
from implementations import get_implementation
from models.verdict import Mode

logger = logging.getLogger(__name__)


def implementation_for(mode):
    mode = Mode(mode)
    return get_implementation(mode.value.lower())


def classify_boundary(M, mode=Mode.THEOREM2):
    """Classify the Gromov boundary of (W, S) with the procedure for `mode`."""
    return implementation_for(mode).classify(M)


def theorem1_racg(G):
    """Classify the right-angled Coxeter group of a simple graph."""
    M = racg_matrix(G)
    logger.debug("Right-angled system on %d vertices, %d edges", G.number_of_nodes(), G.number_of_edges())
    return classify_boundary(M, Mode.THEOREM1)
