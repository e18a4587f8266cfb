"""The James (log5) function, Jamesian functions, and tools to audit them."""

from .core import (
    BoundaryDisposition,
    ConvergenceError,
    Disposition,
    DomainError,
    JamesianError,
    JamesianModel,
    MatchupPoint,
    NumericalError,
    ParamError,
    Provenance,
    StepError,
    TieLimitExceeded,
    UndefinedMatchup,
    classify_boundary,
    evaluate,
)
from .curves import (
    CurveSamples,
    integrate_level_curve_ode,
    sample_gradient_field,
    sample_level_curve,
)
from .generators import (
    Generator,
    builtin_generator,
    eval_g_power,
    generator_gradient,
    generator_selfcheck,
    h32_closed_form,
    invert_monotone,
    jamesian_from_generator,
)
from .james import (
    JAMES,
    james_gradient_direction,
    james_involution_partner,
    james_level_curve,
    james_p,
    james_partials,
    james_second_partials,
    log5_worth,
)
from .piecewise import PIECEWISE, Region, piecewise_j, piecewise_level_curve, region_classify
from .registry import ModelSpec, get_model
from .reports import ConditionReport, Violation
from .verify import (
    McEstimate,
    algebraic_identity_checks,
    check_conditions,
    fd_gradient_check,
    mc_estimate,
    mc_validate,
)

__version__ = "0.1.0"
