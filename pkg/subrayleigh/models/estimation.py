"""
Módulo `estimation`

Tipos de estimação: especificação do estimador, resultado de máxima
verossimilhança, resultado de Monte Carlo e resultado do protocolo adaptativo.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=too-many-instance-attributes

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

import numpy as np

from subrayleigh.errors import DomainError


class EstimatorKind(str, Enum):
    """Estimadores disponíveis."""
    SPADE_CLOSED_FORM = "spade-closed-form"
    DIRECT_MLE = "direct-mle-numeric"
    GENERIC_MLE = "generic-mle-numeric"
    SAMPLE_MEAN_CENTROID = "sample-mean-centroid"


@dataclass(frozen=True)
class EstimatorSpec:
    """
    Especificação do estimador.

    Attributes:
        kind (EstimatorKind): Tipo.
        bounds (tuple[float, float], opcional): Limites de busca; padrão [0, 6/Δk].
        tolerance (float): Tolerância de convergência em θ.
        grid_points (int): Pontos da varredura inicial da verossimilhança.
    """

    kind: EstimatorKind
    bounds: Optional[tuple[float, float]] = None
    tolerance: float = 1e-8
    grid_points: int = 61

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError("❌ Tolerância deve ser positiva.")
        if self.bounds is not None:
            lo, hi = self.bounds
            if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
                raise DomainError(f"❌ Limites de busca inválidos: {self.bounds}")

    def search_bounds(self, delta_k: float) -> tuple[float, float]:
        """Limites efetivos de busca."""
        return self.bounds if self.bounds is not None else (0.0, 6.0 / delta_k)


@dataclass(frozen=True)
class MLEResult:
    """Estimativa de máxima verossimilhança."""

    values: Mapping[str, float]
    log_likelihood: float
    degenerate: bool = False


@dataclass(frozen=True)
class MCResult:
    """
    Resultado de Monte Carlo por ponto da grade de θ.

    A identidade MSE = variância + viés² vale exatamente, pois a variância é
    acumulada com ddof = 0.
    """

    theta_grid: np.ndarray = field(compare=False)
    mse: np.ndarray = field(compare=False)
    bias: np.ndarray = field(compare=False)
    variance: np.ndarray = field(compare=False)
    mse_stderr: np.ndarray = field(compare=False)
    mean_estimate: np.ndarray = field(compare=False)
    trials: int = 0
    photons: int = 0
    seed: int = 0
    receiver: str = ""
    estimator: str = ""


@dataclass(frozen=True)
class BiasCurve:
    """Viés empírico e sua derivada por diferenças finitas."""

    theta_grid: np.ndarray = field(compare=False)
    bias: np.ndarray = field(compare=False)
    derivative: np.ndarray = field(compare=False)
    stderr: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class AdaptiveResult:
    """Estimativas do protocolo em duas etapas (imagem direta → SPADE alinhado)."""

    centroid_estimate: float
    theta_estimate: float
    split: float
    stage1_photons: int
    stage2_photons: int
    residual_offset: float
    metadata: Mapping[str, object] = field(default_factory=dict, compare=False)
