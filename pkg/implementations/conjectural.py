from implementations.theorem2 import Theorem2Decider
from models.verdict import Mode


class ConjecturalDecider(Theorem2Decider):
    """General pipeline that carries on past non-hyperbolic groups.

    Verdicts reached that way are marked conjectural.
    """

    mode = Mode.CONJECTURAL
    continues_when_not_hyperbolic = True
