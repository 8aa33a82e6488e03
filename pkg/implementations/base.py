import logging
from abc import ABC, abstractmethod

from analysis.ends import count_ends
from analysis.nerve_builder import nerve
from analysis.planarity import is_planar_complex, nonplanarity_witness, sphere_completion
from analysis.separation import is_unseparable
from analysis.topology_forms import (
    form_witness,
    is_circle_triangulation,
    is_labelled_wheel,
    is_simplex,
    is_sphere_triangulation,
    nerve_kind,
    torsion_suspects,
    vcd,
)
from models.verdict import Boundary, Diagnostics, Verdict
from utils import config
from utils.errors import SphereCompletionError

logger = logging.getLogger(__name__)


class BaseDecider(ABC):
    """Base class for boundary decision procedures.

    Subclasses choose how hyperbolicity is certified and whether the pipeline
    may continue past a non-hyperbolic group.
    """

    mode = None
    continues_when_not_hyperbolic = False

    @abstractmethod
    def hyperbolicity(self, M, L):
        """Return (hyperbolic, witness) for the system and its nerve."""
        pass

    def prepare(self, M):
        """Reject inputs the procedure does not accept."""
        pass

    def check_excluded_form(self, M, L, diagnostics):
        """Hook run before a circle or wheel verdict is returned."""
        pass

    def validate_matrix(self, M):
        """Whether the system is small enough for the exponential searches."""
        return len(M) <= config.max_generators()

    def classify(self, M):
        """Run the decision pipeline on a Coxeter matrix and return a Verdict."""
        self.prepare(M)
        if not self.validate_matrix(M):
            logger.warning("%d generators exceed the configured %d; this may be slow", len(M), config.max_generators())
        L = nerve(M)
        K = L.complex
        diagnostics = Diagnostics()
        witnesses = []
        notes = []

        diagnostics.simplex = is_simplex(K)
        if diagnostics.simplex:
            diagnostics.ends = 0
            diagnostics.vcd = 0
            return self._verdict(Boundary.EMPTY, [form_witness(K)], diagnostics, notes)

        diagnostics.nerve_planar = is_planar_complex(K)
        self._fill_shape(M, L, diagnostics, notes)
        if not diagnostics.nerve_planar:
            notes.append("nonplanar nerve")
            return self._verdict(Boundary.OUT_OF_SCOPE, [nonplanarity_witness(K)], diagnostics, notes)

        hyperbolic, hyperbolicity_witness = self.hyperbolicity(M, L)
        diagnostics.hyperbolic = hyperbolic
        conjectural = False
        if not hyperbolic:
            witnesses.append(hyperbolicity_witness)

        diagnostics.sphere_tri = is_sphere_triangulation(K)
        if diagnostics.sphere_tri:
            if not hyperbolic:
                notes.append("W is not word-hyperbolic")
            witnesses.insert(0, form_witness(K))
            return self._verdict(Boundary.SPHERE, witnesses, diagnostics, notes, self._conjectural(hyperbolic))

        if not hyperbolic:
            if not self.continues_when_not_hyperbolic:
                notes.append("W is not word-hyperbolic")
                return self._verdict(Boundary.OUT_OF_SCOPE, witnesses, diagnostics, notes)
            conjectural = True
            notes.append("conjectural: W is not word-hyperbolic")

        diagnostics.circle_tri = is_circle_triangulation(K)
        if not diagnostics.circle_tri:
            diagnostics.wheel = is_labelled_wheel(L)
        if diagnostics.circle_tri or diagnostics.wheel:
            self.check_excluded_form(M, L, diagnostics)
            witnesses.insert(0, form_witness(L))
            return self._verdict(Boundary.CIRCLE, witnesses, diagnostics, notes, conjectural)

        unseparable, separation_witness = is_unseparable(L)
        diagnostics.unseparable = unseparable
        if not unseparable:
            witnesses.insert(0, separation_witness)
            return self._verdict(Boundary.NOT_CARPET, witnesses, diagnostics, notes, conjectural)
        verdict = self._verdict(Boundary.SIERPINSKI_CARPET, witnesses, diagnostics, notes, conjectural)
        verdict.check_invariants()
        return verdict

    def _conjectural(self, hyperbolic):
        return self.continues_when_not_hyperbolic and not hyperbolic

    def _fill_shape(self, M, L, diagnostics, notes):
        """Diagnostics that do not depend on the branch taken."""
        K = L.complex
        diagnostics.ends = count_ends(M, L)
        diagnostics.connected_1ended = diagnostics.ends == 1
        if not diagnostics.nerve_planar:
            return
        diagnostics.vcd = vcd(M, L)
        diagnostics.dim_one = diagnostics.vcd == 2
        if is_sphere_triangulation(K):
            diagnostics.boundary_planar = True
        else:
            try:
                sphere_completion(L)
                diagnostics.boundary_planar = True
            except SphereCompletionError:
                logger.warning("Sphere completion failed on a planar nerve")
                diagnostics.boundary_planar = False
        notes.append(f"nerve kind: {nerve_kind(K).value}")
        suspects = torsion_suspects(L)
        if suspects:
            notes.append("torsion suspects: " + ", ".join("{" + ",".join(face) + "}" for face in suspects))

    def _verdict(self, boundary, witnesses, diagnostics, notes, conjectural=False):
        logger.debug("Verdict %s in mode %s", boundary.value, self.mode.value)
        return Verdict(boundary, self.mode, witnesses, diagnostics, notes, conjectural)
