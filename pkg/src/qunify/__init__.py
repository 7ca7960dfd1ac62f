"""Exact q-Bernoulli, q-Euler and q-Genocchi numbers for unified q-exponentials."""

from .alphafam import (AlphaFamily, beta_transform, builtin_family, solve_alpha_system,
                       symmetry_check)
from .exactnum import QRat, parse_qrat
from .qnumbers import bernoulli_numbers, euler_numbers, genocchi_numbers, qnumber_poly
from .series import radius_estimate, unified_exp

__all__ = [
    "AlphaFamily", "QRat", "parse_qrat", "builtin_family", "beta_transform",
    "symmetry_check", "solve_alpha_system", "bernoulli_numbers", "euler_numbers",
    "genocchi_numbers", "qnumber_poly", "unified_exp", "radius_estimate",
]
