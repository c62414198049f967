"""Dirac-Dunkl oscillator toolkit: Dunkl calculus, su(1,1) realizations, spectra,
eigenspinors, coherent states and their numerical cross-checks."""
__version__ = "0.1.0"

from .coherent_states import ClosedForm, CoherentParams, coherent_closed, coherent_series
from .dirac_dunkl import Branch, Case, PhysParams, energy, reconcile_spectrum, spinor
from .dunkl_calculus import Parity, PolyFunc, dunkl_derivative, ladder_ops, reflect
from .errors import DomainError, DunklOscillatorError, NumericError, PreconditionError
from .su11_algebra import Generator, Sector, physical_index, sturmian_action
from .verification import Status, VerificationReport, run_verification
