"""Rigorous numerics for the max-kernel Hardy-Hilbert inequality and its refinement."""

__version__ = "0.1.0"

from .errors import (DivergenceError, DomainError, HHVError, IngestionError,
                     InvariantViolation, ParameterError, PoleError)
from .exact import BernoulliTable, bernoulli_table, gen_binomial
from .interval import Interval
from .zeta import EmSettings, partial_power_sum, tail_power_sum, zeta_em
from .weights import (HolderParams, WeightEstimate, bound_24, bound_25,
                      check_negativity_chain, check_weight_bounds, weight_omega,
                      weight_omega_dual)
from .sequences import SeqKind, SeqSpec, Sequence, generate, parse_spec
from .inequalities import (IneqId, VerificationReport, kernel_double_sum,
                           naive_double_sum, rhs_31, rhs_yang13, sharpness_probe,
                           verify_31, verify_32, verify_corollaries)
