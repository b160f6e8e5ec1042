"""Periodic spatial grid and unitary spectral transforms.

The continuum line is truncated to the periodic interval ``[-L, L)`` sampled
at ``n`` equispaced nodes.  All transforms use the unitary DFT convention
(``norm="ortho"``), so Parseval holds exactly and discrete L2 bookkeeping is
uniform across modules.  Wavenumbers are integer multiples of ``pi/L`` in
standard FFT ordering.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError, DomainError

__all__ = ["Grid", "make_grid"]


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


class Grid:
    """Immutable periodic grid on ``[-half_length, half_length)``.

    Attributes
    ----------
    half_length : float
        Half width L of the domain (dimensionless retarded-time units).
    n_points : int
        Number of nodes, a power of two.
    spacing : float
        Node spacing ``2 L / n``.
    x : ndarray
        Signed node coordinates, ``x[j] = -L + j*spacing``.
    k : ndarray
        Angular wavenumbers in FFT ordering; ``max |k| = pi/spacing``.
    """

    def __init__(self, half_length: float, n_points: int):
        if not half_length > 0:
            raise ConfigurationError("half_length must be positive", "grid.half_length")
        if n_points < 8 or not _is_power_of_two(int(n_points)):
            raise ConfigurationError(
                "n_points must be a power of two >= 8", "grid.n_points"
            )
        self.half_length = float(half_length)
        self.n_points = int(n_points)
        self.spacing = 2.0 * self.half_length / self.n_points
        self.x = -self.half_length + self.spacing * np.arange(self.n_points)
        self.k = 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.spacing)
        self.x.setflags(write=False)
        self.k.setflags(write=False)

    def __repr__(self) -> str:
        return f"Grid(half_length={self.half_length}, n_points={self.n_points})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Grid)
            and other.half_length == self.half_length
            and other.n_points == self.n_points
        )

    def __hash__(self) -> int:
        return hash((self.half_length, self.n_points))

    # -- transforms ---------------------------------------------------------

    def check_field(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values)
        if values.shape != (self.n_points,):
            raise ConfigurationError(
                f"field has shape {values.shape}, grid expects ({self.n_points},)"
            )
        return values

    def to_spectrum(self, values: np.ndarray) -> np.ndarray:
        """Unitary forward DFT of a nodal field."""
        return np.fft.fft(self.check_field(values), norm="ortho")

    def to_field(self, spectrum: np.ndarray) -> np.ndarray:
        """Unitary inverse DFT back to nodal values."""
        return np.fft.ifft(self.check_field(spectrum), norm="ortho")

    def laplacian(self, values: np.ndarray) -> np.ndarray:
        return self.to_field(-self.k**2 * self.to_spectrum(values))

    def derivative(self, values: np.ndarray) -> np.ndarray:
        return self.to_field(1j * self.k * self.to_spectrum(values))

    def translate(self, values: np.ndarray, shift: float, max_shift: float | None = None) -> np.ndarray:
        """Translate a field by ``shift`` via the spectral phase ramp.

        ``max_shift`` (default ``half_length/2``) guards against shifts that
        wrap localized states around the periodic boundary.
        """
        limit = 0.5 * self.half_length if max_shift is None else max_shift
        if abs(shift) > limit:
            raise DomainError(
                f"translation {shift:.4g} exceeds grid margin {limit:.4g}"
            )
        return self.to_field(np.exp(-1j * self.k * shift) * self.to_spectrum(values))

    # -- discrete L2 geometry ------------------------------------------------

    def norm_l2(self, values: np.ndarray) -> float:
        """Spacing-weighted L2 norm."""
        v = self.check_field(values)
        return float(np.sqrt(self.spacing * np.sum(np.abs(v) ** 2)))

    def inner(self, a: np.ndarray, b: np.ndarray) -> complex:
        """Sesquilinear spacing-weighted pairing ``sum conj(a) b dx``."""
        return complex(self.spacing * np.sum(np.conj(self.check_field(a)) * b))

    def inner_real(self, a: np.ndarray, b: np.ndarray) -> float:
        """Real L2 inner product ``Re sum conj(a) b dx``."""
        return float(np.real(self.inner(a, b)))

    def dealias_mask(self) -> np.ndarray:
        """Two-thirds-rule spectral mask (optional; off by default in solvers)."""
        return (np.abs(self.k) <= (2.0 / 3.0) * np.max(np.abs(self.k))).astype(float)


def make_grid(half_length: float, n_points: int) -> Grid:
    """Construct a periodic grid; see :class:`Grid` for the contract."""
    return Grid(half_length, n_points)
