"""
Módulo `moments`

Tipos do pipeline de momentos: `MomentSet` (momentos estimados ou exatos) e
`ReconstructionResult` (imagem reconstruída no suporte declarado).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models.scene import IntensityGrid

EVEN_ONLY = "even-only"
INTERLEAVED = "interleaved"


@dataclass(frozen=True)
class MomentSet:
    """
    Momentos de intensidade P_mn e, opcionalmente, momentos cruzados ímpares K_k.

    Attributes:
        orders (tuple[tuple[int, int]]): Ordens (m, n) de P_mn.
        values (np.ndarray): P_mn.
        stderr (np.ndarray): Erros padrão (zero para valores exatos).
        delta_k (float): Δk usado nas ponderações.
        parity (str): "even-only" ou "interleaved".
        odd_orders (tuple[int]): Índices k de K_k (pares n = k, k+1 ao longo de x).
        odd_values (np.ndarray): K_k.
        odd_stderr (np.ndarray): Erros padrão de K_k.
        photons (int, opcional): N por configuração de medição.
    """

    orders: tuple[tuple[int, int], ...]
    values: np.ndarray = field(compare=False)
    stderr: np.ndarray = field(compare=False)
    delta_k: float = 1.0
    parity: str = EVEN_ONLY
    odd_orders: tuple[int, ...] = ()
    odd_values: np.ndarray = field(default_factory=lambda: np.zeros(0), compare=False)
    odd_stderr: np.ndarray = field(default_factory=lambda: np.zeros(0), compare=False)
    photons: Optional[int] = None

    def __post_init__(self):
        if np.any(np.asarray(self.values) < 0):
            raise DomainError("❌ Momentos de intensidade devem ser não negativos.")
        if np.any(np.asarray(self.stderr) < 0) or np.any(np.asarray(self.odd_stderr) < 0):
            raise DomainError("❌ Erros padrão devem ser não negativos.")

    def value(self, m: int, n: int = 0) -> float:
        """P_mn pelo par de ordens."""
        return float(self.values[self.orders.index((m, n))])

    def truncated(self, max_order: int) -> "MomentSet":
        """Subconjunto com m + n ≤ max_order (ímpares com 2k+1 ≤ 2·max_order)."""
        idx = [i for i, (m, n) in enumerate(self.orders) if m + n <= max_order]
        idx_impar = [i for i, k in enumerate(self.odd_orders) if k + 1 <= max_order]
        return MomentSet(
            orders=tuple(self.orders[i] for i in idx),
            values=np.asarray(self.values)[idx],
            stderr=np.asarray(self.stderr)[idx],
            delta_k=self.delta_k,
            parity=self.parity,
            odd_orders=tuple(self.odd_orders[i] for i in idx_impar),
            odd_values=np.asarray(self.odd_values)[idx_impar],
            odd_stderr=np.asarray(self.odd_stderr)[idx_impar],
            photons=self.photons,
        )


@dataclass(frozen=True)
class ReconstructionResult:
    """
    Reconstrução de intensidade no suporte declarado.

    Attributes:
        grid (IntensityGrid): Estimativa não negativa com soma 1.
        residual_norm (float): Norma do resíduo ponderado dos momentos.
        regularization (float): λ usado.
        method (str): "nnls" ou "lp".
        infeasible (bool): Restrições de momento não satisfeitas dentro da tolerância.
    """

    grid: IntensityGrid
    residual_norm: float
    regularization: float
    method: str = "nnls"
    infeasible: bool = False
