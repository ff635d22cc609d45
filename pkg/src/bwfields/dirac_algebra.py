"""Gamma matrices assembled from the index-conversion tables, and the spin-1/2
bridge between bispinors and the two-component field pair.

Bispinor block order is (psi_B, xi_{B'}), both lower.  The gamma matrices
are stored as gamma[q][alpha, beta] acting on columns, with the off-diagonal
blocks built from the g tables; all block transposes needed to keep row
indices first are applied here, in one place.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .massive_bw import BWFieldAtP
from .momentum import FourMomentum
from .spinor_core import EPS_LO, EPS_UP, build_ivdw, levi_civita4, sigma_generators

__all__ = [
    "GammaSet",
    "build_gammas",
    "pack_bispinor",
    "unpack_bispinor",
    "dirac_residual",
    "dirac_adjoint",
    "dirac_current",
    "dirac_current_matrix_route",
    "norm_bilinear_integrand",
]


@dataclass(frozen=True)
class GammaSet:
    """Four gamma matrices with the derived generators and pseudoscalar."""

    gamma: np.ndarray  # (4, 4, 4)
    sigma: np.ndarray  # (4, 4, 4, 4) = (gamma_q gamma_r - gamma_r gamma_q) / 4i
    gamma5: np.ndarray  # (4, 4)


def build_gammas() -> GammaSet:
    """gamma_q = sqrt2 * offdiag(g_{qA}^{B'}, -g_q^B_{A'}) in block form."""
    g = build_ivdw()
    gamma = np.zeros((4, 4, 4), dtype=complex)
    for q in range(4):
        upper_right = np.sqrt(2.0) * (g.lo[q] @ EPS_UP.T)  # rows A, cols B'
        lower_left = -np.sqrt(2.0) * (g.up[q] @ EPS_LO).T  # rows A', cols B
        gamma[q, :2, 2:] = upper_right
        gamma[q, 2:, :2] = lower_left
    sigma = np.einsum("qab,rbc->qrac", gamma, gamma)
    sigma = (sigma - np.transpose(sigma, (1, 0, 2, 3))) / 4j
    e = levi_civita4()
    gamma5 = (1j / 24.0) * np.einsum(
        "abcd,aij,bjk,ckl,dlm->im", e, gamma, gamma, gamma, gamma
    )
    return GammaSet(gamma=gamma, sigma=sigma, gamma5=gamma5)


def pack_bispinor(f: BWFieldAtP) -> np.ndarray:
    """Stack the two components of a spin-1/2 field into a 4-column."""
    if f.n != 1:
        raise ValueError("bispinor packing needs a spin-1/2 field")
    return np.concatenate([f.components[(0,)], f.components[(1,)]], axis=-1)


def unpack_bispinor(psi: np.ndarray, p: FourMomentum) -> BWFieldAtP:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape[-1] != 4:
        raise ValueError("bispinor must have 4 trailing components")
    return BWFieldAtP(n=1, p=p, components={(0,): psi[..., :2], (1,): psi[..., 2:]})


def dirac_residual(psi: np.ndarray, p: FourMomentum, mass: float) -> float:
    """Largest entry of (p^q gamma_q - m) psi."""
    gam = build_gammas().gamma
    slash = np.einsum("...q,qab->...ab", p.vec, gam)
    lhs = np.einsum("...ab,...b->...a", slash, np.asarray(psi, dtype=complex))
    return float(np.max(np.abs(lhs - mass * psi)))


def dirac_adjoint(psi: np.ndarray) -> np.ndarray:
    """Adjoint row built from the epsilon-block object: (-xibar^B, psibar^{B'}).

    Conjugate both blocks, raise each with eps, then multiply by the
    off-diagonal epsilon block matrix from the left.
    """
    psi = np.asarray(psi, dtype=complex)
    psibar_up = np.einsum("AB,...B->...A", EPS_UP, np.conj(psi[..., :2]))
    xibar_up = np.einsum("AB,...B->...A", EPS_UP, np.conj(psi[..., 2:]))
    return np.concatenate([-xibar_up, psibar_up], axis=-1)


def dirac_current(psi: np.ndarray) -> np.ndarray:
    """Spinor form j_a = sqrt2 g_a^{AA'} (psi_A psibar_{A'} + xi_{A'} xibar_A)."""
    g = build_ivdw().up
    psi = np.asarray(psi, dtype=complex)
    u, v = psi[..., :2], psi[..., 2:]
    pair = np.einsum("...i,...j->...ij", u, np.conj(u)) + np.einsum(
        "...i,...j->...ij", np.conj(v), v
    )
    j = np.sqrt(2.0) * np.einsum("aij,...ij->...a", g, pair)
    scale = max(1.0, float(np.max(np.abs(j))))
    if np.max(np.abs(j.imag)) > 1e-12 * scale:
        raise AssertionError("current has non-negligible imaginary part")
    return j.real


def dirac_current_matrix_route(psi: np.ndarray) -> np.ndarray:
    """j_a = adjoint(psi) gamma_a psi; must match the spinor form."""
    gam = build_gammas().gamma
    adj = dirac_adjoint(psi)
    j = np.einsum("...a,qab,...b->...q", adj, gam, psi)
    return j.real


def norm_bilinear_integrand(psi: np.ndarray, p: FourMomentum, mass: float) -> np.ndarray:
    """sign * m^{-2} p^a (adjoint gamma_a psi) contraction, per sample.

    The current carries a lower world index, so the contraction with p^a
    is a plain component sum.
    """
    j = dirac_current_matrix_route(psi)
    return p.sign * np.sum(p.vec * j, axis=-1) / mass**2


def _sigma_blocks_reference() -> tuple[np.ndarray, np.ndarray]:
    """Lower-world-index generators for block comparison with the gamma set."""
    sg = sigma_generators()
    return sg.sigma_low, sg.sigma_bar_low
