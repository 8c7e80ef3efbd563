"""
Módulo `outcome`

Define `OutcomePMF`, a lei de probabilidade dos resultados de uma medição em
função dos parâmetros da cena, e `DetectionRecord`, o registro de contagens
(ou posições) de um experimento simulado.

A lei é uma função pura `params -> vetor de probabilidades` (suporte
discreto) ou `params -> densidade` (suporte contínuo). Parâmetros omitidos
assumem os valores da cena usada na construção.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=too-many-instance-attributes

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Mapping, Optional

import numpy as np

from subrayleigh.errors import DomainError


class Support(str, Enum):
    """Suporte dos resultados."""
    CONTINUOUS = "continuous-1D"
    DISCRETE = "discrete"


class BudgetMode(str, Enum):
    """Convenção do orçamento de fótons."""
    FIXED = "fixed-N"
    POISSON = "poisson-N"


@dataclass(frozen=True)
class OutcomePMF:
    """
    Lei de resultados de um receptor.

    Attributes:
        receiver (str): Identificador do receptor.
        support (Support): Discreto (modos + bucket/descarte) ou contínuo (posição).
        law (Callable): params -> probabilidades, ou params -> (x -> densidade).
        base_params (dict): Valores padrão dos parâmetros.
        delta_k (float): Largura de banda RMS da PSF, escala dos passos numéricos.
        labels (tuple[str]): Rótulos dos resultados discretos.
        discard_labels (tuple[str]): Resultados que representam fótons descartados.
        poisson_intensity (bool): Se verdadeiro, a lei devolve intensidades médias por
            fóton emitido (soma ≠ 1) e as contagens são Poisson independentes.
        window (Callable, opcional): params -> (a, b), janela de integração contínua.
        sampler (Callable, opcional): (params, n, rng) -> posições amostradas.
        metadata (dict): Avisos e proveniência.
    """

    receiver: str
    support: Support
    law: Callable[[Mapping[str, float]], Any] = field(compare=False)
    base_params: Mapping[str, float] = field(default_factory=dict)
    delta_k: float = 1.0
    labels: tuple[str, ...] = ()
    discard_labels: tuple[str, ...] = ()
    poisson_intensity: bool = False
    window: Optional[Callable[[Mapping[str, float]], tuple[float, float]]] = field(
        default=None, compare=False)
    sampler: Optional[Callable] = field(default=None, compare=False)
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False)

    @property
    def is_discrete(self) -> bool:
        """Verdadeiro para suporte discreto."""
        return self.support is Support.DISCRETE

    def params(self, overrides: Optional[Mapping[str, float]] = None) -> dict[str, float]:
        """
        Combina os parâmetros padrão com substituições.

        Raises:
            DomainError: Parâmetro desconhecido para esta lei.
        """
        valores = dict(self.base_params)
        for nome, valor in (overrides or {}).items():
            if nome not in valores:
                raise DomainError(f"❌ Parâmetro '{nome}' não pertence à lei de '{self.receiver}'.")
            valores[nome] = float(valor)
        return valores

    def probabilities(self, overrides: Optional[Mapping[str, float]] = None) -> np.ndarray:
        """Vetor de probabilidades (ou intensidades por fóton emitido)."""
        if not self.is_discrete:
            raise DomainError("❌ Lei contínua não possui vetor de probabilidades.")
        return np.asarray(self.law(self.params(overrides)), dtype=float)

    def density(self, x, overrides: Optional[Mapping[str, float]] = None) -> np.ndarray:
        """Densidade de posição avaliada em x."""
        if self.is_discrete:
            raise DomainError("❌ Lei discreta não possui densidade.")
        return np.asarray(self.law(self.params(overrides))(np.asarray(x, dtype=float)))

    def integration_window(self, overrides: Optional[Mapping[str, float]] = None):
        """Janela (a, b) que contém toda a massa relevante da densidade."""
        return self.window(self.params(overrides))

    def detected_fraction(self, overrides: Optional[Mapping[str, float]] = None) -> float:
        """Fração de fótons detectados (1 − descarte), ou n(θ)/N para leis de intensidade."""
        if not self.is_discrete:
            return 1.0
        p = self.probabilities(overrides)
        mantidos = [i for i, r in enumerate(self.labels) if r not in self.discard_labels]
        return float(p[mantidos].sum())

    def evolve(self, **changes) -> "OutcomePMF":
        """Cópia com campos substituídos."""
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class DetectionRecord:
    """
    Registro de detecções simulado.

    Attributes:
        receiver (str): Receptor que gerou o registro.
        photons_emitted (int): Orçamento nominal N.
        budget_mode (BudgetMode): fixed-N ou poisson-N.
        seed (int): Semente usada.
        params (dict): Parâmetros verdadeiros usados na simulação.
        labels (tuple[str]): Rótulos (suporte discreto).
        counts (np.ndarray, opcional): Contagens por resultado.
        positions (np.ndarray, opcional): Posições detectadas (suporte contínuo).
    """

    receiver: str
    photons_emitted: int
    budget_mode: BudgetMode
    seed: int
    params: Mapping[str, float] = field(default_factory=dict)
    labels: tuple[str, ...] = ()
    counts: Optional[np.ndarray] = field(default=None, compare=False)
    positions: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        if self.counts is not None and np.any(np.asarray(self.counts) < 0):
            raise DomainError("❌ Contagens negativas no registro.")

    @property
    def total_detected(self) -> int:
        """Total de fótons registrados fora do canal de descarte."""
        if self.positions is not None:
            return int(len(self.positions))
        return int(sum(c for r, c in zip(self.labels, self.counts) if r != "discard"))

    def count(self, label: str) -> int:
        """Contagem de um resultado pelo rótulo (0 se ausente)."""
        if label not in self.labels:
            return 0
        return int(self.counts[self.labels.index(label)])
