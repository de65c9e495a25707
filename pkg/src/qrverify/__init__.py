"""Verification workbench for quadratic-residue codes and their extensions."""

from .cycint import CycInt, chebotarev_check, gamma_times_ell, gauss_periods, minor_det, zeta_pow
from .cyccode import CyclicCode, Poly, dual, min_distance, recursive_for, trace_code, weight_enumerator
from .errors import ConsistencyError, DomainError, ResourceError
from .gf import FieldCtx, FqElem, find_root_of_unity, gf_build, legendre, trace_to_prime
from .qrext import (
    ExtendedCode,
    MonomialMap,
    QrFamily,
    build_qr_family,
    epsilon_falsification,
    extend,
    min_weight_orbits,
    psl2_generators,
    sigma_map,
    verify_D_identity,
    verify_gleason_prange,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CycInt",
    "CyclicCode",
    "DomainError",
    "ExtendedCode",
    "FieldCtx",
    "FqElem",
    "MonomialMap",
    "Poly",
    "QrFamily",
    "ResourceError",
    "build_qr_family",
    "chebotarev_check",
    "dual",
    "epsilon_falsification",
    "extend",
    "find_root_of_unity",
    "gamma_times_ell",
    "gauss_periods",
    "gf_build",
    "legendre",
    "min_distance",
    "min_weight_orbits",
    "minor_det",
    "psl2_generators",
    "recursive_for",
    "sigma_map",
    "trace_code",
    "trace_to_prime",
    "verify_D_identity",
    "verify_gleason_prange",
    "weight_enumerator",
    "zeta_pow",
]
