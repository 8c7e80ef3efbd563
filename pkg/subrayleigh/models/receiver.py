"""
Módulo `receiver`

Define a classe `Receiver`: tipo de medição (imagem direta ou variantes de
SPADE), base modal associada, desalinhamento do eixo óptico e matriz de
crosstalk opcional.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models.mode_basis import ModeBasis


class ReceiverKind(str, Enum):
    """Tipos de receptor."""
    DIRECT = "direct"
    SPADE = "spade"
    BSPADE = "bspade"
    SLIVER = "sliver"
    SPLICE = "splice"
    TRISPADE = "trispade"


def validar_estocastica(matriz, tolerancia: float = 1e-12) -> np.ndarray:
    """
    Verifica se a matriz é estocástica por linhas.

    Args:
        matriz (array-like): Matriz quadrada candidata.
        tolerancia (float): Desvio máximo admitido na soma de cada linha.

    Returns:
        np.ndarray: A matriz convertida para float.

    Raises:
        DomainError: Matriz não quadrada, com entradas negativas ou linhas que não somam 1.
    """
    X = np.asarray(matriz, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DomainError(f"❌ Matriz de crosstalk deve ser quadrada, forma {X.shape}")
    if np.any(X < 0):
        raise DomainError("❌ Matriz de crosstalk com entradas negativas.")
    desvio = np.max(np.abs(X.sum(axis=1) - 1.0))
    if desvio > tolerancia:
        raise DomainError(f"❌ Linhas do crosstalk não somam 1 (desvio {desvio:.3e}).")
    return X


@dataclass(frozen=True)
class Receiver:
    """
    Configuração do receptor.

    Attributes:
        kind (ReceiverKind): Tipo de medição.
        basis (ModeBasis, opcional): Base modal (receptores SPADE).
        alignment_offset (float): Eixo do receptor menos o centroide verdadeiro.
        crosstalk (np.ndarray, opcional): Matriz estocástica sobre os resultados.
        target_mode (int): Modo alvo do BSPADE.
        rotation (float): Rotação [rad] do referencial do objeto no TriSPADE.
    """

    kind: ReceiverKind
    basis: Optional[ModeBasis] = None
    alignment_offset: float = 0.0
    crosstalk: Optional[np.ndarray] = field(default=None, compare=False)
    target_mode: int = 1
    rotation: float = 0.0

    def __post_init__(self):
        if self.crosstalk is not None:
            object.__setattr__(self, "crosstalk", validar_estocastica(self.crosstalk))
        if self.target_mode < 0:
            raise DomainError("❌ Modo alvo deve ser não negativo.")
