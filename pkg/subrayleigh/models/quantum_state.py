"""
Módulo `quantum_state`

Define `QuantumStateModel`: estado de um fóton como mistura de funções de
onda transversais deslocadas (pesos reais) ou família de estados coerentes
(amplitudes complexas), ambos parametrizados por um dicionário nomeado.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models.psf import PSF

Componentes = Sequence[tuple[complex, float]]


class StateRepresentation(str, Enum):
    """Representação do estado."""
    MIXTURE = "mixture"
    COHERENT = "coherent"


class Normalization(str, Enum):
    """Normalização da QFI para estados coerentes."""
    PER_PHOTON = "per-photon"
    PER_EMITTED = "per-emitted"
    PER_DETECTED = "per-detected"
    TOTAL = "total"


@dataclass(frozen=True)
class QuantumStateModel:
    """
    Modelo de estado quântico paramétrico.

    Para `MIXTURE`, `components(params)` devolve pares (peso, deslocamento) e o
    estado é Σ w_k |ψ_{d_k}⟩⟨ψ_{d_k}|. Para `COHERENT`, devolve pares
    (amplitude α_k, deslocamento) e o campo é α(x) = Σ α_k ψ(x − d_k).
    """

    representation: StateRepresentation
    psf: PSF
    components: Callable[[Mapping[str, float]], Componentes] = field(compare=False)
    base_params: Mapping[str, float] = field(default_factory=dict)
    mean_photons: float = 1.0
    normalization: Normalization = Normalization.PER_PHOTON

    def params(self, overrides: Optional[Mapping[str, float]] = None) -> dict[str, float]:
        """Combina parâmetros padrão com substituições."""
        valores = dict(self.base_params)
        for nome, valor in (overrides or {}).items():
            if nome not in valores:
                raise DomainError(f"❌ Parâmetro '{nome}' desconhecido para o modelo quântico.")
            valores[nome] = float(valor)
        return valores

    def state(self, overrides: Optional[Mapping[str, float]] = None
              ) -> tuple[np.ndarray, np.ndarray]:
        """Coeficientes e deslocamentos no ponto de parâmetros dado."""
        comps = self.components(self.params(overrides))
        coef = np.asarray([c for c, _ in comps], dtype=complex)
        desl = np.asarray([d for _, d in comps], dtype=float)
        if self.representation is StateRepresentation.MIXTURE:
            pesos = coef.real
            if np.any(pesos < -1e-15) or abs(pesos.sum() - 1.0) > 1e-12:
                raise DomainError("❌ Pesos da mistura devem ser não negativos e somar 1.")
        return coef, desl

    def is_pure(self, overrides: Optional[Mapping[str, float]] = None) -> bool:
        """Mistura com um único deslocamento efetivo (ou estado coerente)."""
        if self.representation is StateRepresentation.COHERENT:
            return True
        coef, desl = self.state(overrides)
        ativos = desl[coef.real > 0]
        return bool(np.ptp(ativos) == 0.0) if len(ativos) else True
