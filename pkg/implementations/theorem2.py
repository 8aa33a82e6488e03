from analysis.hyperbolicity import is_hyperbolic, right_angled_hyperbolicity
from implementations.base import BaseDecider
from models.verdict import Mode


class Theorem2Decider(BaseDecider):
    """Decision procedure for general Coxeter systems with planar nerve."""

    mode = Mode.THEOREM2

    def hyperbolicity(self, M, L):
        # right-angled systems report an empty square, as the right-angled procedure does
        if M.is_right_angled():
            return right_angled_hyperbolicity(M, L)
        return is_hyperbolic(M)
