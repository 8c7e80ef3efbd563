"""
Módulo `psf`

Define a classe `PSF`, função de espalhamento pontual em amplitude, normalizada
em L². Três famílias são suportadas: gaussiana, sinc (OTF retangular) e uma
PSF amostrada em grade uniforme com interpolação cúbica.

A largura de banda RMS (`delta_k`) é armazenada no objeto no momento da
construção; as fábricas em `subrayleigh.optics` garantem a consistência.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=invalid-name

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline


class PSFKind(str, Enum):
    """Família da PSF."""
    GAUSSIAN = "gaussian"
    SINC = "sinc"
    SAMPLED = "custom-sampled"


@dataclass(frozen=True)
class PSF:
    """
    PSF de amplitude real e simétrica.

    Attributes:
        kind (PSFKind): Família.
        width_param (float): σ (gaussiana), W (sinc) ou passo da grade (amostrada).
        delta_k (float): Largura de banda RMS [1/comprimento].
        grid (np.ndarray, opcional): Posições da grade (apenas PSF amostrada).
        samples (np.ndarray, opcional): Amplitudes normalizadas na grade.
    """

    kind: PSFKind
    width_param: float
    delta_k: float
    grid: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    samples: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    _spline: Optional[CubicSpline] = field(default=None, compare=False, repr=False)

    @property
    def sigma(self) -> float:
        """Desvio padrão da intensidade para a família gaussiana."""
        if self.kind is not PSFKind.GAUSSIAN:
            raise AttributeError("❌ sigma só é definido para PSF gaussiana.")
        return self.width_param

    def amplitude(self, x):
        """Amplitude ψ(x)."""
        x = np.asarray(x, dtype=float)
        if self.kind is PSFKind.GAUSSIAN:
            s = self.width_param
            return (2.0 * np.pi * s * s) ** -0.25 * np.exp(-x * x / (4.0 * s * s))
        if self.kind is PSFKind.SINC:
            W = self.width_param
            return np.sqrt(W / np.pi) * np.sinc(W * x / np.pi)
        return self._amostrada(x, derivada=False)

    def derivative(self, x):
        """Derivada espacial ∂ψ/∂x."""
        x = np.asarray(x, dtype=float)
        if self.kind is PSFKind.GAUSSIAN:
            s = self.width_param
            return -x / (2.0 * s * s) * self.amplitude(x)
        if self.kind is PSFKind.SINC:
            W = self.width_param
            u = W * x
            pequeno = np.abs(u) < 1e-4
            u_seguro = np.where(pequeno, 1.0, u)
            dsinc = np.where(pequeno, -u / 3.0,
                             (u_seguro * np.cos(u_seguro) - np.sin(u_seguro)) / u_seguro ** 2)
            return np.sqrt(W / np.pi) * W * dsinc
        return self._amostrada(x, derivada=True)

    def intensity(self, x):
        """Intensidade |ψ(x)|², densidade de probabilidade de posição."""
        return self.amplitude(x) ** 2

    def overlap(self, d):
        """
        Autocorrelação C(d) = ∫ψ(x)ψ(x−d)dx.

        Args:
            d (float | np.ndarray): Deslocamento(s).

        Returns:
            np.ndarray: Sobreposição, igual a 1 em d = 0.
        """
        d = np.asarray(d, dtype=float)
        if self.kind is PSFKind.GAUSSIAN:
            return np.exp(-(d * self.delta_k) ** 2 / 2.0)
        if self.kind is PSFKind.SINC:
            return np.sinc(self.width_param * d / np.pi)
        a, b = float(self.grid[0]), float(self.grid[-1])
        valores = [
            quad(lambda x, dd=dd: float(self.amplitude(x) * self.amplitude(x - dd)),
                 a, b, limit=400, epsabs=1e-12)[0]
            for dd in np.atleast_1d(d)
        ]
        return np.asarray(valores).reshape(d.shape)

    def half_window(self) -> float:
        """Meia-largura da janela de integração em torno de cada fonte."""
        if self.kind is PSFKind.GAUSSIAN:
            return 10.0 * self.width_param
        if self.kind is PSFKind.SINC:
            return 200.0 * np.pi / self.width_param
        return float(max(abs(self.grid[0]), abs(self.grid[-1])))

    def _amostrada(self, x, derivada: bool):
        spline = self._spline.derivative() if derivada else self._spline
        dentro = (x >= self.grid[0]) & (x <= self.grid[-1])
        return np.where(dentro, spline(np.clip(x, self.grid[0], self.grid[-1])), 0.0)
