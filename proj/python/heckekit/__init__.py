"""Cusps, Kloosterman sums, Eisenstein series and identity checks for Gamma_0(q)."""

from ._core import (
    Cusp,
    Error,
    cusp_count,
    cusp_width,
    eisen_coeff,
    eisen_phi,
    enumerate_cusps,
    gamma,
    hurwitz_zeta,
    kloosterman_bruteforce,
    kloosterman_factorized,
    kloosterman_squarefree,
    list_identities,
    moment,
    ordinary_kloosterman,
    scattering_matrix,
    unitarity_residual,
    verify,
    zeta,
)


def verify_all(seed=0, pattern=None):
    """Run every registered identity (optionally those whose id contains `pattern`)."""
    return [verify(i["id"], None, seed) for i in list_identities() if pattern is None or pattern in i["id"]]


__all__ = [name for name in dir() if not name.startswith("_")]
