"""
Módulo `scene`

Modelos paramétricos de fontes: par incoerente de pontos, par coerente,
constelação de emissores e grade de intensidade. Todos são valores imutáveis;
os parâmetros desconhecidos (centroide, separação, brilho) são os alvos de
estimação e de teste de hipóteses.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from subrayleigh.errors import DomainError

Posicao = Union[float, tuple[float, float]]


@dataclass(frozen=True)
class TwoPointScene:
    """
    Par incoerente: fontes em centroid ∓ θ/2.

    Attributes:
        centroid (float): Ponto médio do par.
        separation (float): Separação θ ≥ 0.
        brightness_split (float): Fração b₂ de fótons da fonte em +θ/2.
    """

    centroid: float = 0.0
    separation: float = 0.0
    brightness_split: float = 0.5

    def __post_init__(self):
        if not np.isfinite(self.centroid):
            raise DomainError("❌ Centroide deve ser finito.")
        if not self.separation >= 0:
            raise DomainError(f"❌ Separação deve ser não negativa: {self.separation}")
        if not 0.0 <= self.brightness_split <= 1.0:
            raise DomainError(f"❌ brightness_split fora de [0, 1]: {self.brightness_split}")

    def params(self) -> dict[str, float]:
        """Vetor de parâmetros nomeados da cena."""
        return {"centroid": self.centroid, "theta": self.separation,
                "b2": self.brightness_split}


@dataclass(frozen=True)
class CoherentPairScene:
    """
    Par de fontes com grau de coerência complexo γ.

    A fonte 1 (amplitude α₁) fica em centroid + θ/2 e a fonte 2 em centroid − θ/2.
    """

    separation: float
    mean_photons: float
    gamma: complex = 0.0
    centroid: float = 0.0

    def __post_init__(self):
        if not self.separation >= 0:
            raise DomainError(f"❌ Separação deve ser não negativa: {self.separation}")
        if not self.mean_photons > 0:
            raise DomainError(f"❌ Número médio de fótons deve ser positivo: {self.mean_photons}")
        if abs(self.gamma) > 1.0 + 1e-12:
            raise DomainError(f"❌ |γ| deve ser ≤ 1, recebido {abs(self.gamma):.6g}")

    def params(self) -> dict[str, float]:
        """Vetor de parâmetros nomeados da cena."""
        return {"centroid": self.centroid, "theta": self.separation}


@dataclass(frozen=True)
class Constellation:
    """
    Conjunto de emissores pontuais incoerentes.

    Attributes:
        positions (np.ndarray): (K,) para 1D ou (K, 2) para 2D.
        brightness (np.ndarray): Pesos positivos com soma 1.
    """

    positions: np.ndarray = field(compare=False)
    brightness: np.ndarray = field(compare=False)

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        pesos = np.asarray(self.brightness, dtype=float)
        if pos.ndim not in (1, 2) or (pos.ndim == 2 and pos.shape[1] != 2):
            raise DomainError("❌ Posições devem ter forma (K,) ou (K, 2).")
        if pos.shape[0] != pesos.shape[0] or pesos.ndim != 1 or len(pesos) == 0:
            raise DomainError("❌ Número de pesos difere do número de emissores.")
        if np.any(pesos <= 0):
            raise DomainError("❌ Brilhos relativos devem ser positivos.")
        if abs(pesos.sum() - 1.0) > 1e-12:
            raise DomainError(f"❌ Brilhos devem somar 1, soma = {pesos.sum():.15g}")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "brightness", pesos)

    @classmethod
    def from_emitters(cls, emitters: Sequence[tuple[Posicao, float]]) -> "Constellation":
        """Constrói a partir de pares (posição, brilho)."""
        posicoes = [e[0] for e in emitters]
        pesos = [e[1] for e in emitters]
        return cls(np.asarray(posicoes, dtype=float), np.asarray(pesos, dtype=float))

    @property
    def dimensionality(self) -> int:
        """1 ou 2."""
        return 1 if self.positions.ndim == 1 else 2


@dataclass(frozen=True)
class IntensityGrid:
    """
    Imagem de intensidade não negativa com soma unitária.

    O pixel (i, j) está em x = (j − (W−1)/2)·pitch, y = (i − (H−1)/2)·pitch,
    isto é, a grade é centrada na origem.
    """

    values: np.ndarray = field(compare=False)
    pixel_pitch: float = 1.0

    def __post_init__(self):
        valores = np.atleast_2d(np.asarray(self.values, dtype=float))
        if valores.ndim != 2:
            raise DomainError("❌ A grade de intensidade deve ser 2D (H × W).")
        if np.any(valores < 0):
            raise DomainError("❌ Intensidades devem ser não negativas.")
        if not self.pixel_pitch > 0:
            raise DomainError("❌ pixel_pitch deve ser positivo.")
        total = valores.sum()
        if abs(total - 1.0) > 1e-9:
            raise DomainError(f"❌ A grade deve somar 1, soma = {total:.12g}")
        object.__setattr__(self, "values", valores)

    @classmethod
    def normalized(cls, values, pixel_pitch: float = 1.0) -> "IntensityGrid":
        """Normaliza valores não negativos para soma 1."""
        valores = np.atleast_2d(np.asarray(values, dtype=float))
        total = valores.sum()
        if not total > 0:
            raise DomainError("❌ Grade sem intensidade.")
        return cls(valores / total, pixel_pitch)

    @property
    def shape(self) -> tuple[int, int]:
        """(H, W)."""
        return self.values.shape

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """Malhas (X, Y) com as coordenadas dos centros dos pixels."""
        h, w = self.values.shape
        x = (np.arange(w) - (w - 1) / 2.0) * self.pixel_pitch
        y = (np.arange(h) - (h - 1) / 2.0) * self.pixel_pitch
        return np.meshgrid(x, y)


@dataclass(frozen=True)
class FieldGrid:
    """Campo complexo do objeto amostrado em grade centrada (amplitude por pixel)."""

    values: np.ndarray = field(compare=False)
    pixel_pitch: float = 1.0

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """Malhas (X, Y) dos centros dos pixels."""
        valores = np.atleast_2d(self.values)
        h, w = valores.shape
        x = (np.arange(w) - (w - 1) / 2.0) * self.pixel_pitch
        y = (np.arange(h) - (h - 1) / 2.0) * self.pixel_pitch
        return np.meshgrid(x, y)


Scene = Union[TwoPointScene, CoherentPairScene, Constellation, IntensityGrid]
