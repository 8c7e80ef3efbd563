"""
Módulo `mode_basis`

Define `ModeBasis`, o conjunto ordenado de modos transversais ortonormais
usado pelos receptores de demultiplexação, e `OverlapTable`, a tabela de
amplitudes ⟨ψ_n|ψ(·−d)⟩ para uma lista de deslocamentos.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=too-many-instance-attributes

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from subrayleigh.errors import DomainError


class BasisKind(str, Enum):
    """Tipo de base modal."""
    HERMITE_GAUSSIAN = "hermite-gaussian"
    PARITY = "parity"
    INTERLEAVED = "interleaved-hg"
    PSF_ADAPTED = "psf-adapted-sampled"


@dataclass(frozen=True)
class ModeBasis:
    """
    Base modal com corte finito M e canal residual ("bucket").

    Attributes:
        kind (BasisKind): Tipo da base.
        scale (float): Escala da base; σ para HG, W para a base adaptada à sinc.
        cutoff (int): Maior índice de modo retido.
        dimensionality (int): 1 ou 2 (2D separável).
        interleave_offset (int): 0 ou 1; índice inicial dos pares (ψ_n ± ψ_{n+1}).
    """

    kind: BasisKind
    scale: float
    cutoff: int = 20
    dimensionality: int = 1
    interleave_offset: int = 0

    def __post_init__(self):
        if not self.scale > 0:
            raise DomainError(f"❌ Escala da base deve ser positiva: {self.scale}")
        if self.cutoff < 0:
            raise DomainError(f"❌ Corte da base deve ser não negativo: {self.cutoff}")
        if self.dimensionality not in (1, 2):
            raise DomainError(f"❌ Dimensionalidade inválida: {self.dimensionality}")
        if self.interleave_offset not in (0, 1):
            raise DomainError("❌ interleave_offset deve ser 0 ou 1.")

    @property
    def size(self) -> int:
        """Número de modos retidos por eixo."""
        return self.cutoff + 1


@dataclass(frozen=True)
class OverlapTable:
    """
    Amplitudes a[n][d] = ∫ψ_n(x)ψ(x−d)dx e vazamento 1 − Σ_n a².

    Attributes:
        basis (ModeBasis): Base usada.
        displacements (np.ndarray): Deslocamentos (comprimento).
        amplitudes (np.ndarray): Matriz (M+1) × len(displacements).
        leakage (np.ndarray): Vazamento por deslocamento, em [0, 1].
    """

    basis: ModeBasis
    displacements: np.ndarray = field(compare=False)
    amplitudes: np.ndarray = field(compare=False)
    leakage: np.ndarray = field(compare=False)

    def probabilities(self) -> np.ndarray:
        """Probabilidades |a|² por modo e deslocamento."""
        return self.amplitudes ** 2
