"""Coverage probabilities of LoRa uplinks with successive interference cancellation.

Thin wrapper over the C++ core; see ``lorasic._core`` for the full surface.
"""

from ._core import (
    CapacityRow,
    ConfigError,
    ConvergenceError,
    CoverageBreakdown,
    InfeasibleError,
    McEstimate,
    McReport,
    NetworkConfig,
    OutOfCoverageError,
    SfParams,
    capacity_table,
    capture_probability,
    connection_probability,
    coverage,
    default_sf_table,
    duty_cycle_from_toa,
    estimate,
    find_alpha_for_target,
    hyp2f1_1b,
    noise_power_dbm,
    q2_integral_quadrature,
    sic_capture_probability,
    single_interferer_given_collision,
)

__version__ = "0.1.0"
