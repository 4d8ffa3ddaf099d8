"""Cl(1,3) multivectors and the spinning-electron simulator."""

from ._sta_zbw import (
    ConfigError,
    Multivector,
    NumericalAbort,
    StaError,
    check,
    config_text,
    exp,
    log_rotor,
    mv_to_matrix,
    oracle,
    plane_wave_residual,
    sandwich,
    scalar_product,
    simulate,
    spin_bivector,
    velocity,
    write_trajectory,
)

CSV_COLUMNS = (
    "tau x0 x1 x2 x3 v0 v1 v2 v3 H pv OmegaS K1 K2 K3 res_nl res_dh".split()
)

__all__ = [
    "CSV_COLUMNS",
    "ConfigError",
    "Multivector",
    "NumericalAbort",
    "StaError",
    "check",
    "config_text",
    "exp",
    "log_rotor",
    "mv_to_matrix",
    "oracle",
    "plane_wave_residual",
    "sandwich",
    "scalar_product",
    "simulate",
    "spin_bivector",
    "velocity",
    "write_trajectory",
]
