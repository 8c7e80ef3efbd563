"""
Módulo `fisher`

Define `FisherMatrix` (informação de Fisher clássica, por fóton) e
`BoundReport` (CRB, QCRB e variantes com proveniência).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np


@dataclass(frozen=True)
class FisherMatrix:
    """
    Matriz de informação de Fisher.

    Attributes:
        params (tuple[str]): Nomes dos parâmetros, na ordem das linhas.
        matrix (np.ndarray): Matriz simétrica semidefinida positiva.
        per_photon (bool): Normalização por cópia detectada.
        flags (frozenset[str]): "singular-support", "rank-deficient", "degenerate".
        degenerate_params (tuple[str]): Parâmetros com linha identicamente nula.
    """

    params: tuple[str, ...]
    matrix: np.ndarray = field(compare=False)
    per_photon: bool = True
    flags: frozenset[str] = frozenset()
    degenerate_params: tuple[str, ...] = ()

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", 0.5 * (m + m.T))

    def entry(self, a: str, b: Optional[str] = None) -> float:
        """Elemento (a, b); diagonal quando b é omitido."""
        i = self.params.index(a)
        j = self.params.index(b or a)
        return float(self.matrix[i, j])

    @property
    def rank_deficient(self) -> bool:
        """Verdadeiro quando a inversa exigiu pseudo-inversa."""
        return "rank-deficient" in self.flags

    def inverse(self) -> np.ndarray:
        """Inversa (ou pseudo-inversa, se singular)."""
        if self.rank_deficient:
            return np.linalg.pinv(self.matrix, rcond=1e-12, hermitian=True)
        return np.linalg.inv(self.matrix)

    def crb(self, photons: float) -> np.ndarray:
        """Cota de Cramér-Rao I⁻¹/N."""
        return self.inverse() / photons


@dataclass(frozen=True)
class BoundReport:
    """
    Conjunto de cotas para um ponto de operação.

    Attributes:
        params (tuple[str]): Ordem dos parâmetros.
        photons (float): N.
        crb (np.ndarray): Cota de Cramér-Rao clássica.
        qcrb (np.ndarray, opcional): Cota quântica, quando conhecida.
        bias_corrected (float, opcional): Cota corrigida por viés.
        van_trees (float, opcional): Cota bayesiana.
        provenance (dict): Fórmula/quadratura de origem de cada entrada.
        psd_violation (float): Menor autovalor de crb − qcrb (≥ −1e-8 esperado).
    """

    params: tuple[str, ...]
    photons: float
    crb: np.ndarray = field(compare=False)
    qcrb: Optional[np.ndarray] = field(default=None, compare=False)
    bias_corrected: Optional[float] = None
    van_trees: Optional[float] = None
    provenance: Mapping[str, str] = field(default_factory=dict)
    psd_violation: float = 0.0
