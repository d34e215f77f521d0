# Copyright the cylsolid contributors
# SPDX-License-Identifier: Apache-2.0
"""Solid angles of cylinders and discs seen from a cosine-law point source."""

from ._core import (
    ConvergenceError,
    DomainError,
    InvalidGeometry,
    InvalidSweep,
    SolidAngleResult,
    direct_2d_omega,
    mc_omega,
    omega_circ,
    omega_cyl0,
    omega_spread,
    omega_total,
    quad_spread,
    regime,
    sweep,
    to_steradians,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "InvalidGeometry",
    "InvalidSweep",
    "SolidAngleResult",
    "direct_2d_omega",
    "mc_omega",
    "omega_circ",
    "omega_cyl0",
    "omega_spread",
    "omega_total",
    "quad_spread",
    "regime",
    "sweep",
    "to_steradians",
]
__version__ = "0.1.0"
