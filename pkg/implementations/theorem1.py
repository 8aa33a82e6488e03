from analysis.hyperbolicity import right_angled_hyperbolicity
from analysis.separation import is_unseparable
from implementations.base import BaseDecider
from models.verdict import Mode
from utils.errors import ConsistencyError, RightAngledRequiredError


class Theorem1Decider(BaseDecider):
    """Decision procedure for right-angled Coxeter systems."""

    mode = Mode.THEOREM1

    def prepare(self, M):
        if not M.is_right_angled():
            raise RightAngledRequiredError("The right-angled procedure needs every exponent in {2, inf}")

    def hyperbolicity(self, M, L):
        return right_angled_hyperbolicity(M, L)

    def check_excluded_form(self, M, L, diagnostics):
        """A hyperbolic unseparable flag nerve is never a circle or a wheel."""
        unseparable, _ = is_unseparable(L)
        if diagnostics.hyperbolic and unseparable:
            raise ConsistencyError("Hyperbolic unseparable right-angled nerve reached an excluded form")
