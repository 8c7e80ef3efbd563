"""
Módulo `hypothesis`

Tipos do teste de hipóteses: par de hipóteses, relatório de expoente de
Chernoff e resultado de discriminação por Monte Carlo.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models.outcome import OutcomePMF
from subrayleigh.models.quantum_state import QuantumStateModel

Hipotese = Union[OutcomePMF, QuantumStateModel]


@dataclass(frozen=True)
class HypothesisPair:
    """Duas hipóteses com probabilidades a priori (π₁, π₂)."""

    h1: Hipotese = field(compare=False)
    h2: Hipotese = field(compare=False)
    prior: tuple[float, float] = (0.5, 0.5)

    def __post_init__(self):
        p1, p2 = self.prior
        if p1 <= 0 or p2 <= 0 or abs(p1 + p2 - 1.0) > 1e-12:
            raise DomainError(f"❌ Probabilidades a priori inválidas: {self.prior}")


@dataclass(frozen=True)
class ExponentReport:
    """
    Expoente de erro ξ (ou ξ_Q).

    Attributes:
        value (float): Expoente; `inf` quando os suportes são disjuntos.
        s_star (float): Minimizador em [0, 1] (nan quando irrelevante).
        method (str): Origem do valor.
        infinite (bool): Suportes disjuntos.
        leading_coefficient (float, opcional): Coeficiente de ordem dominante ajustado.
        leading_order (bool): Valor truncado na ordem dominante.
    """

    value: float
    s_star: float = float("nan")
    method: str = ""
    infinite: bool = False
    leading_coefficient: Optional[float] = None
    leading_order: bool = False
    metadata: Mapping[str, object] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class ExoplanetEntropies:
    """Entropias relativas quântica e de imagem direta para o teste estrela/exoplaneta."""

    quantum: float
    direct: float
    leading_order: bool = True


@dataclass(frozen=True)
class DiscriminationResult:
    """
    Resultado de um experimento de discriminação simulado.

    Attributes:
        photons (np.ndarray): Valores de N.
        error_rates (np.ndarray): Probabilidade de erro empírica por N.
        fitted_exponent (float): Inclinação de −log P_e versus N.
        stderr (float): Erro padrão da inclinação.
        lower_bound (bool): Sem erros no maior N; `fitted_exponent` é só uma cota inferior.
        trials (int): Ensaios por N.
        seed (int): Semente mestre.
    """

    photons: np.ndarray = field(compare=False)
    error_rates: np.ndarray = field(compare=False)
    fitted_exponent: float = float("nan")
    stderr: float = float("nan")
    lower_bound: bool = False
    trials: int = 0
    seed: int = 0
