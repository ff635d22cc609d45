"""Two-spinor index algebra, Infeld-van der Waerden symbols and SL(2,C) maps.

Conventions (fixed once, everything downstream relies on them):

* Metric signature (+,-,-,-); Levi-Civita normalization e^{0123} = +1.
* The epsilon spinor has eps_{01} = eps^{01} = +1, i.e. the table
  [[0, 1], [-1, 0]] for both index positions (unprimed and primed alike).
* Raising contracts the second slot of eps-up:   psi^A = eps^{AB} psi_B.
  Lowering contracts the first slot of eps-down:  psi_A = psi^B eps_{BA}.
  With this staggering the round trip is the identity and
  psi^A phi_A = -psi_A phi^A.
* Infeld-van der Waerden tables: g_a^{AA'} = sigma_a / sqrt(2) with
  sigma_a = (1, sigma_vec); the all-lower table follows by lowering both
  spinor indices and coincides with (1, -sigma_vec) transposed / sqrt(2).
* A stored SL(2,C) matrix S acts on lower unprimed indices,
  psi'_X = S[X, Y] psi_Y; lower primed indices transform with conj(S).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np
from scipy.linalg import expm

__all__ = [
    "EPS_LO",
    "EPS_UP",
    "METRIC",
    "SpinorTensor",
    "IvdWSymbol",
    "SigmaGenerators",
    "SL2CElement",
    "LorentzMatrix",
    "build_ivdw",
    "sigma_generators",
    "dual",
    "levi_civita4",
    "exp_rep",
    "sl2c_to_lorentz",
    "random_sl2c",
    "boost_z",
    "world_from_spinor",
    "spinor_from_world",
    "check_symmetric",
]

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# Same numeric table for upper and lower epsilon; the asymmetry between
# raising and lowering lives in which slot gets contracted.
EPS_LO = np.array([[0.0, 1.0], [-1.0, 0.0]])
EPS_UP = np.array([[0.0, 1.0], [-1.0, 0.0]])

_PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


def _raise_axis(arr: np.ndarray, axis: int) -> np.ndarray:
    """psi^A = eps^{AB} psi_B applied to one axis of a component array."""
    out = np.tensordot(EPS_UP, arr, axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)


def _lower_axis(arr: np.ndarray, axis: int) -> np.ndarray:
    """psi_A = psi^B eps_{BA} applied to one axis of a component array."""
    out = np.tensordot(EPS_LO, arr, axes=([0], [axis]))
    return np.moveaxis(out, 0, axis)


# ---------------------------------------------------------------------------
# Spinor tensors
# ---------------------------------------------------------------------------

Slot = tuple[bool, bool]  # (primed, upper)


@dataclass(frozen=True)
class SpinorTensor:
    """Dense complex array with per-axis spinor index metadata.

    The trailing ``len(slots)`` axes of ``array`` are spinor indices of
    dimension 2; any leading axes are broadcast (batch) dimensions.  Each
    slot records ``(primed, upper)`` flags.
    """

    array: np.ndarray
    slots: tuple[Slot, ...]

    def __post_init__(self):
        arr = np.asarray(self.array, dtype=complex)
        object.__setattr__(self, "array", arr)
        object.__setattr__(self, "slots", tuple((bool(p), bool(u)) for p, u in self.slots))
        if arr.ndim < len(self.slots):
            raise ValueError("array rank smaller than number of slots")
        if arr.shape[arr.ndim - len(self.slots):] != (2,) * len(self.slots):
            raise ValueError("spinor axes must all have dimension 2")

    @property
    def rank(self) -> int:
        return len(self.slots)

    def _axis(self, slot: int) -> int:
        if not 0 <= slot < self.rank:
            raise IndexError(f"slot {slot} out of range for rank {self.rank}")
        return self.array.ndim - self.rank + slot

    def raise_index(self, slot: int) -> "SpinorTensor":
        primed, upper = self.slots[slot]
        if upper:
            raise ValueError(f"slot {slot} is already upper")
        new = _raise_axis(self.array, self._axis(slot))
        slots = list(self.slots)
        slots[slot] = (primed, True)
        return SpinorTensor(new, tuple(slots))

    def lower_index(self, slot: int) -> "SpinorTensor":
        primed, upper = self.slots[slot]
        if not upper:
            raise ValueError(f"slot {slot} is already lower")
        new = _lower_axis(self.array, self._axis(slot))
        slots = list(self.slots)
        slots[slot] = (primed, False)
        return SpinorTensor(new, tuple(slots))

    def conjugate(self) -> "SpinorTensor":
        """Complex conjugation swaps primed and unprimed index character."""
        slots = tuple((not p, u) for p, u in self.slots)
        return SpinorTensor(np.conj(self.array), slots)


def check_symmetric(t: SpinorTensor, group: tuple[int, ...], tol: float = 1e-12) -> bool:
    """True when the tensor is invariant under swaps inside one index group."""
    base = t.array
    off = base.ndim - t.rank
    for i in group:
        for j in group:
            if i >= j:
                continue
            if t.slots[i] != t.slots[j]:
                raise ValueError("cannot compare indices of different type")
            swapped = np.swapaxes(base, off + i, off + j)
            if np.max(np.abs(base - swapped)) > tol:
                return False
    return True


# ---------------------------------------------------------------------------
# Infeld-van der Waerden symbols
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IvdWSymbol:
    """Conversion tables between world-vector and spinor index pairs.

    ``up[a]`` stores g_a^{AA'} and ``lo[a]`` stores g_a_{AA'}; ``up_w``/
    ``lo_w`` carry the world index raised with the metric.
    """

    up: np.ndarray  # (4, 2, 2) g_a^{AA'}
    lo: np.ndarray  # (4, 2, 2) g_a_{AA'}
    up_w: np.ndarray  # (4, 2, 2) g^a^{AA'}
    lo_w: np.ndarray  # (4, 2, 2) g^a_{AA'}


@lru_cache(maxsize=1)
def build_ivdw() -> IvdWSymbol:
    """Build the g tables; g_a^{AA'} = sigma_a / sqrt(2)."""
    up = _PAULI / np.sqrt(2.0)
    lo = np.einsum("ba,nbc,cd->nad", EPS_LO, up, EPS_LO)
    up_w = np.einsum("ab,bij->aij", METRIC, up)
    lo_w = np.einsum("ab,bij->aij", METRIC, lo)
    return IvdWSymbol(up=up, lo=lo, up_w=up_w, lo_w=lo_w)


_LETTERS = "abcdefghijklmnopqrst"


def world_from_spinor(arr: np.ndarray, n_pairs: int, upper: bool = False) -> np.ndarray:
    """Convert ``n_pairs`` spinor index pairs to world indices.

    The trailing axes must be arranged (A_1..A_n, A'_1..A'_n).  For lower
    spinor indices (default) this applies v_a = g_a^{AA'} v_{AA'}; with
    ``upper=True`` it applies v^a = g^a_{AA'} v^{AA'}.
    """
    g = build_ivdw().lo_w if upper else build_ivdw().up
    arr = np.asarray(arr, dtype=complex)
    n = n_pairs
    us, vs, ws = _LETTERS[:n], _LETTERS[n:2 * n], _LETTERS[2 * n:3 * n]
    subs = [f"...{us}{vs}"] + [f"{ws[i]}{us[i]}{vs[i]}" for i in range(n)]
    return np.einsum(",".join(subs) + f"->...{ws}", arr, *(g for _ in range(n)))


def spinor_from_world(arr: np.ndarray, n_world: int, upper: bool = False) -> np.ndarray:
    """Inverse of :func:`world_from_spinor`: v_{AA'} = g^a_{AA'} v_a.

    Output trailing axes are grouped (A_1..A_n, A'_1..A'_n) with the same
    index height as the world input.
    """
    g = build_ivdw().up if upper else build_ivdw().lo_w
    arr = np.asarray(arr, dtype=complex)
    n = n_world
    us, vs, ws = _LETTERS[:n], _LETTERS[n:2 * n], _LETTERS[2 * n:3 * n]
    subs = [f"...{ws}"] + [f"{ws[i]}{us[i]}{vs[i]}" for i in range(n)]
    return np.einsum(",".join(subs) + f"->...{us}{vs}", arr, *(g for _ in range(n)))


# ---------------------------------------------------------------------------
# Levi-Civita and the spin generators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def levi_civita4() -> np.ndarray:
    """Rank-4 alternating tensor with e^{0123} = +1 (all indices upper)."""
    e = np.zeros((4, 4, 4, 4))

    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    for perm in permutations(range(4)):
        e[perm] = sign(perm)
    return e


@dataclass(frozen=True)
class SigmaGenerators:
    """Generators of the (1/2,0) and (0,1/2) representations.

    ``sigma[a, b]`` stores sigma^{ab}_X{}^Y as a 2x2 block (row X, column
    Y); ``sigma_bar`` is the primed counterpart.  ``sigma_low`` carries
    both world indices lowered, as needed by the exponential map.
    """

    sigma: np.ndarray  # (4, 4, 2, 2)
    sigma_bar: np.ndarray  # (4, 4, 2, 2)
    sigma_low: np.ndarray
    sigma_bar_low: np.ndarray


def _sigma_from_epsilon_form() -> tuple[np.ndarray, np.ndarray]:
    """The purely epsilon-spinor construction of the generators."""
    g = build_ivdw()
    e = EPS_LO
    # sigma_{AA'BB'XY} = (1/2i) eps_{A'B'} (eps_{AX} eps_{BY} + eps_{BX} eps_{AY})
    s6 = (
        np.einsum("mn,ax,by->ambnxy", e, e, e)
        + np.einsum("mn,bx,ay->ambnxy", e, e, e)
    ) / 2j
    sb6 = (
        np.einsum("ab,mx,ny->ambnxy", e, e, e)
        + np.einsum("ab,nx,my->ambnxy", e, e, e)
    ) / 2j
    # World indices: sigma_{ab XY} = g_a^{AA'} g_b^{BB'} sigma_{AA'BB'XY},
    # then raise a, b with the metric and raise Y with eps.
    s_low = np.einsum("aij,bkl,ijklxy->abxy", g.up, g.up, s6)
    sb_low = np.einsum("aij,bkl,ijklxy->abxy", g.up, g.up, sb6)
    s_up = np.einsum("ac,bd,cdxy->abxy", METRIC, METRIC, s_low)
    sb_up = np.einsum("ac,bd,cdxy->abxy", METRIC, METRIC, sb_low)
    s_up = np.einsum("zc,abxc->abxz", EPS_UP, s_up)
    sb_up = np.einsum("zc,abxc->abxz", EPS_UP, sb_up)
    return s_up, sb_up


@lru_cache(maxsize=1)
def sigma_generators() -> SigmaGenerators:
    """Build the generators from antisymmetrized g contractions.

    The epsilon-spinor route is computed alongside and must agree
    entrywise; a mismatch means the index conventions have drifted.
    """
    g = build_ivdw()
    # sigma^{ab}_X{}^Y = (1/2i)(g^a_{XA'} g^{bYA'} - g^b_{XA'} g^{aYA'})
    t = np.einsum("axm,bym->abxy", g.lo_w, g.up_w)
    sigma = (t - np.transpose(t, (1, 0, 2, 3))) / 2j
    # primed: contraction over the unprimed index instead
    t2 = np.einsum("axm,bxn->abmn", g.lo_w, g.up_w)
    sigma_bar = (t2 - np.transpose(t2, (1, 0, 2, 3))) / 2j

    s_eps, sb_eps = _sigma_from_epsilon_form()
    if np.max(np.abs(sigma - s_eps)) > 1e-14 or np.max(np.abs(sigma_bar - sb_eps)) > 1e-14:
        raise AssertionError("generator construction routes disagree")

    sigma_low = np.einsum("ac,bd,cdxy->abxy", METRIC, METRIC, sigma)
    sigma_bar_low = np.einsum("ac,bd,cdxy->abxy", METRIC, METRIC, sigma_bar)
    return SigmaGenerators(sigma, sigma_bar, sigma_low, sigma_bar_low)


def dual(t: np.ndarray) -> np.ndarray:
    """Half-contraction with the alternating tensor on two upper world axes.

    (*t)^{ab...} = (1/2) e^{ab}_{cd} t^{cd...} acting on the first two axes.
    """
    e_mixed = np.einsum("abef,ec,fd->abcd", levi_civita4(), METRIC, METRIC)
    return 0.5 * np.einsum("abcd,cd...->ab...", e_mixed, np.asarray(t))


# ---------------------------------------------------------------------------
# SL(2,C) and Lorentz matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SL2CElement:
    """Unit-determinant 2x2 complex matrix acting on lower unprimed indices."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.shape != (2, 2):
            raise ValueError("SL(2,C) element must be 2x2")
        if abs(np.linalg.det(m) - 1.0) > 1e-12:
            raise ValueError(f"determinant {np.linalg.det(m)} is not 1")

    def __matmul__(self, other: "SL2CElement") -> "SL2CElement":
        return SL2CElement(self.matrix @ other.matrix)


@dataclass(frozen=True)
class LorentzMatrix:
    """Real proper orthochronous Lorentz matrix Lambda^a_b."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", m)
        if m.shape != (4, 4):
            raise ValueError("Lorentz matrix must be 4x4")
        if np.max(np.abs(m.T @ METRIC @ m - METRIC)) > 1e-9:
            raise ValueError("metric is not preserved")
        if m[0, 0] < 1.0 - 1e-12:
            raise ValueError("matrix is not orthochronous")
        if abs(np.linalg.det(m) - 1.0) > 1e-9:
            raise ValueError("determinant is not +1")

    def inverse(self) -> "LorentzMatrix":
        # Lambda^{-1} = g Lambda^T g for metric-preserving matrices.
        return LorentzMatrix(METRIC @ self.matrix.T @ METRIC)

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        return LorentzMatrix(self.matrix @ other.matrix)


def exp_rep(omega: np.ndarray) -> SL2CElement:
    """exp((i/2) omega^{ab} sigma_{ab}) for real antisymmetric parameters."""
    omega = np.asarray(omega, dtype=float)
    if omega.shape != (4, 4):
        raise ValueError("parameter array must be 4x4")
    if np.max(np.abs(omega + omega.T)) > 1e-12:
        raise ValueError("parameter array must be antisymmetric")
    gen = 0.5j * np.einsum("ab,abxy->xy", omega, sigma_generators().sigma_low)
    return SL2CElement(expm(gen))


def sl2c_to_lorentz(s: SL2CElement) -> LorentzMatrix:
    """Vector representation induced by the spinor one.

    Lambda_a{}^b = g_a^{AA'} S[A,B] conj(S)[A',B'] g^b_{BB'}, raised to
    Lambda^a{}_b with the metric.  Imaginary parts must vanish.
    """
    g = build_ivdw()
    lam_lu = np.einsum("aij,ik,jl,bkl->ab", g.up, s.matrix, np.conj(s.matrix), g.lo_w)
    if np.max(np.abs(lam_lu.imag)) > 1e-12:
        raise AssertionError("induced Lorentz matrix has imaginary parts")
    lam = METRIC @ lam_lu.real @ METRIC
    return LorentzMatrix(lam)


def random_sl2c(rng: np.random.Generator, scale: float = 1.0) -> SL2CElement:
    """Random group element: uniform antisymmetric parameters in [-scale, scale]."""
    w = np.zeros((4, 4))
    for a in range(4):
        for b in range(a + 1, 4):
            w[a, b] = rng.uniform(-scale, scale)
            w[b, a] = -w[a, b]
    return exp_rep(w)


def boost_z(rapidity: float) -> SL2CElement:
    """Pure boost along z with the given rapidity."""
    w = np.zeros((4, 4))
    w[0, 3] = rapidity
    w[3, 0] = -rapidity
    return exp_rep(w)
