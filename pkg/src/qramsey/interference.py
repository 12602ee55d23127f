"""Multi-slit far-field intensity: coherent, decohered and correlated patterns.

Each slit contributes the Fraunhofer amplitude

    psi_i(s) = sinc(k w s / 2L) * exp(i k c_i s / L)

at screen position ``s``, with ``sinc(u) = sin(u)/u``.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_WAVENUMBER = 2 * math.pi
DEFAULT_SPACING = 5.0
DEFAULT_WIDTH = 1.0
DEFAULT_DISTANCE = 100.0
DEFAULT_RANGE = (-30.0, 30.0)
DEFAULT_SAMPLES = 1201


def uniform_centers(n: int, spacing: float = DEFAULT_SPACING) -> tuple:
    return tuple((i - (n - 1) / 2) * spacing for i in range(n))


@dataclass(frozen=True)
class InterferenceConfig:
    n_slits: int = 2
    slit_centers: tuple = ()
    slit_width: float = DEFAULT_WIDTH
    wavenumber: float = DEFAULT_WAVENUMBER
    screen_distance: float = DEFAULT_DISTANCE
    screen_range: tuple = DEFAULT_RANGE
    sample_count: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if not self.slit_centers:
            object.__setattr__(self, "slit_centers", uniform_centers(self.n_slits))
        object.__setattr__(self, "slit_centers", tuple(float(c) for c in self.slit_centers))
        if not 1 <= self.n_slits <= 8:
            raise ValueError(f"n_slits must be in 1..8, got {self.n_slits}")
        if len(self.slit_centers) != self.n_slits:
            raise ValueError("slit_centers must have one entry per slit")
        if self.slit_width <= 0 or self.wavenumber <= 0 or self.screen_distance <= 0:
            raise ValueError("slit_width, wavenumber and screen_distance must be positive")
        if self.n_slits > 1:
            spacing = min(np.diff(sorted(self.slit_centers)))
            if self.slit_width >= spacing:
                raise ValueError(f"slit_width {self.slit_width} must be below the slit spacing {spacing}")
        if self.sample_count < 2:
            raise ValueError("sample_count must be at least 2")
        lo, hi = self.screen_range
        if not lo < hi:
            raise ValueError("screen_range must be increasing")

    @classmethod
    def uniform(cls, n_slits: int, spacing: float = DEFAULT_SPACING, **kwargs) -> "InterferenceConfig":
        return cls(n_slits=n_slits, slit_centers=uniform_centers(n_slits, spacing), **kwargs)

    def positions(self) -> np.ndarray:
        return np.linspace(self.screen_range[0], self.screen_range[1], self.sample_count)


@dataclass(frozen=True)
class Pattern:
    positions: np.ndarray
    intensities: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.positions) <= 0):
            raise ValueError("sample positions must be strictly increasing")

    @property
    def samples(self) -> list:
        return list(zip(self.positions.tolist(), self.intensities.tolist()))

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("s,intensity\n")
        for s, p in zip(self.positions, self.intensities):
            buf.write(f"{s:.15g},{p:.15g}\n")
        return buf.getvalue()


@dataclass(frozen=True)
class CorrelationMatrix:
    """Path-correlation coefficients; Hermitian with a zero diagonal."""

    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.values, dtype=complex)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("correlation matrix must be square")
        if np.any(np.diag(c) != 0):
            raise ValueError("correlation matrix must have a zero diagonal")
        if not np.allclose(c, c.conj().T, rtol=0, atol=1e-12):
            raise ValueError("correlation matrix must satisfy C_ij = conj(C_ji)")
        object.__setattr__(self, "values", c)

    @classmethod
    def zeros(cls, n: int) -> "CorrelationMatrix":
        return cls(np.zeros((n, n), dtype=complex))

    @classmethod
    def parse(cls, text: str) -> "CorrelationMatrix":
        """Comma-separated rows of Python complex literals, e.g. ``0,0.1+0.2j``."""
        rows = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        return cls(np.array([[complex(v.strip()) for v in row.split(",")] for row in rows]))

    @property
    def n(self) -> int:
        return self.values.shape[0]


def _sinc(u):
    return np.sinc(np.asarray(u) / np.pi)


def amplitudes(cfg: InterferenceConfig, s) -> np.ndarray:
    """Array of shape ``(n_slits, len(s))`` holding every slit amplitude."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    k, w, L = cfg.wavenumber, cfg.slit_width, cfg.screen_distance
    envelope = _sinc(k * w * s / (2 * L))
    centers = np.asarray(cfg.slit_centers)[:, None]
    return envelope[None, :] * np.exp(1j * k * centers * s[None, :] / L)


def slit_amplitude(cfg: InterferenceConfig, i: int, s: float) -> complex:
    """Amplitude of slit ``i`` (1-based) at screen position ``s``."""
    if not 1 <= i <= cfg.n_slits:
        raise IndexError(f"slit index {i} outside 1..{cfg.n_slits}")
    k, w, L = cfg.wavenumber, cfg.slit_width, cfg.screen_distance
    u = k * w * s / (2 * L)
    envelope = 1.0 if u == 0 else math.sin(u) / u
    return envelope * complex(math.cos(k * cfg.slit_centers[i - 1] * s / L),
                              math.sin(k * cfg.slit_centers[i - 1] * s / L))


def pattern(cfg: InterferenceConfig) -> Pattern:
    """Coherent sum ``|sum_i psi_i|^2``."""
    s = cfg.positions()
    psi = amplitudes(cfg, s)
    total = psi.sum(axis=0)
    return Pattern(s, (total * total.conj()).real)


def decohered_pattern(cfg: InterferenceConfig, gamma: float) -> Pattern:
    """``sum_i |psi_i|^2 + exp(-gamma) * sum_{i != j} psi_i conj(psi_j)``.

    With gamma = 0 this returns :func:`pattern` itself.
    """
    if gamma < 0:
        raise ValueError("gamma must be non-negative")
    if gamma == 0:
        return pattern(cfg)
    s = cfg.positions()
    psi = amplitudes(cfg, s)
    incoherent = (psi * psi.conj()).real.sum(axis=0)
    total = psi.sum(axis=0)
    cross = (total * total.conj()).real - incoherent
    return Pattern(s, incoherent + math.exp(-gamma) * cross)


def incoherent_pattern(cfg: InterferenceConfig) -> Pattern:
    """``sum_i |psi_i|^2``: the fringe-free envelope."""
    s = cfg.positions()
    psi = amplitudes(cfg, s)
    return Pattern(s, (psi * psi.conj()).real.sum(axis=0))


def entangled_pattern(cfg: InterferenceConfig, corr: CorrelationMatrix) -> Pattern:
    """``|sum_i psi_i + sum_{i,j} C_ij psi_i psi_j|^2`` evaluated as written.

    The quadratic term is not invariant under a global phase of the
    amplitudes and carries no normalization bound.
    """
    if corr.n != cfg.n_slits:
        raise ValueError(f"correlation matrix is {corr.n}x{corr.n}, config has {cfg.n_slits} slits")
    s = cfg.positions()
    psi = amplitudes(cfg, s)
    linear = psi.sum(axis=0)
    quadratic = np.einsum("ij,is,js->s", corr.values, psi, psi)
    total = linear + quadratic
    return Pattern(s, (total * total.conj()).real)


def fringe_visibility(p: Pattern, window: tuple) -> float:
    """``(P_max - P_min) / (P_max + P_min)`` over samples inside ``window``."""
    lo, hi = window
    mask = (p.positions >= lo) & (p.positions <= hi)
    if mask.sum() < 3:
        raise ValueError(f"window {window} holds fewer than 3 samples")
    vals = p.intensities[mask]
    pmax, pmin = float(vals.max()), float(vals.min())
    if pmax == 0:
        return 0.0
    return (pmax - pmin) / (pmax + pmin)


def normalized(p: Pattern, envelope: Pattern) -> Pattern:
    """Divide out a fringe-free envelope sample by sample."""
    return Pattern(p.positions, p.intensities / envelope.intensities)


def count_local_maxima(p: Pattern, window: tuple, rel_tol: float = 1e-9) -> int:
    """Strict interior local maxima inside ``window``."""
    lo, hi = window
    mask = (p.positions >= lo) & (p.positions <= hi)
    v = p.intensities[mask]
    tol = rel_tol * max(float(v.max()), 1.0)
    return int(np.sum((v[1:-1] > v[:-2] + tol) & (v[1:-1] > v[2:] + tol)))
