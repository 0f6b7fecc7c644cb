"""Annulus partition functions of the critical O(n)/Potts loop models.

Coulomb-gas q-series for the scaling-limit annulus partition function with
free boundaries and generalized winding-loop weights, their crossed-channel
(conjugate-modulus) forms, minimal-model character decompositions, and the
derived observables: percolation crossing probability, self-avoiding-loop
partition functions, logarithmic n -> 0 derivatives, boundary entropies, and
the boundary-term shift of the strip Casimir energy.

All objects are immutable and every operation is a pure function; everything
here is safe to call concurrently.
"""

from .annulus import (
    ChannelEval,
    boundary_g_factor,
    duality_check,
    flux_sum,
    leading_asymptote,
    partition_crossed,
    partition_direct,
    partition_direct_parity,
    partition_naive,
)
from .boundary import BoundaryCoupling, c_effective, e0_zeta, e1_cutoff, e1_zeta
from .characters import (
    CharacterSpec,
    decompose,
    decomposition_to_json,
    rocha_caridi,
)
from .errors import (
    BackendMismatchError,
    DecompositionError,
    DomainError,
    IdentityError,
    LoopGasError,
    RegulatorFitError,
    TailBoundError,
)
from .observables import (
    AsymptoteFit,
    asymptote_fit,
    crossing_probability,
    log_chain_scale,
    log_partition,
    log_partition_exact_core,
    saw_loop_dense,
    saw_loop_derivative_series,
    saw_loop_dilute,
    wrap_count_generating,
)
from .params import (
    CGParams,
    Phase,
    WrapWeight,
    as_phase,
    central_charge_slope_at_zero,
    default_wrap,
    electric_dimension,
    leg_exponent,
    params_from_n,
    vortex_marginality_check,
    wrap_coefficient,
    wrap_weight,
)
from .qseries import (
    Backend,
    GenSeries,
    SeriesTerm,
    dedekind_eta_series,
    eta_modular_check,
    euler_inverse,
    euler_product,
    eval_at,
    max_abs_coeff_diff,
    pentagonal_series,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
