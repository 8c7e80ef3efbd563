"""
Módulo `utils`

Funções auxiliares compartilhadas pelos receptores: eixo óptico do receptor,
deslocamentos das fontes relativos a esse eixo e aviso de vazamento do corte.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Callable, Mapping

import numpy as np

from subrayleigh.errors import UnsupportedError
from subrayleigh.models import (PSF, BasisKind, Constellation, IntensityGrid, ModeBasis, PSFKind,
                                Scene, TwoPointScene)
from subrayleigh.scene import parametrized_components

logger = logging.getLogger(__name__)

LIMITE_VAZAMENTO = 1e-3


def eixo_receptor(scene: Scene, offset: float = 0.0) -> tuple[float, float]:
    """
    Posição (x, y) do eixo do receptor: centroide verdadeiro + desalinhamento.

    O eixo é fixo durante o cálculo das derivadas da lei; apenas as fontes se movem.
    """
    if isinstance(scene, TwoPointScene):
        return scene.centroid + offset, 0.0
    if isinstance(scene, Constellation):
        pos = scene.positions
        if pos.ndim == 1:
            return float(np.dot(scene.brightness, pos)) + offset, 0.0
        cx, cy = scene.brightness @ pos
        return float(cx) + offset, float(cy)
    return offset, 0.0


def dimensao_cena(scene: Scene) -> int:
    """1 para pares e constelações lineares; 2 para constelações 2D e grades com mais de uma linha."""
    if isinstance(scene, Constellation):
        return scene.dimensionality
    if isinstance(scene, IntensityGrid):
        return 1 if scene.shape[0] == 1 else 2
    return 1


def componentes_relativas(scene: Scene, eixo: tuple[float, float], dimensao: int,
                          rotation: float = 0.0
                          ) -> tuple[dict[str, float], Callable[[Mapping[str, float]], list]]:
    """
    Parâmetros da cena e função params -> [(peso, deslocamento relativo ao eixo)].

    Em 2D, fontes 1D são colocadas em y = 0 e a rotação do referencial do
    objeto é aplicada depois da translação.
    """
    base_params, comps = parametrized_components(scene)
    ex, ey = eixo
    cos_r, sin_r = np.cos(rotation), np.sin(rotation)

    def relativas(p):
        saida = []
        for w, d in comps(p):
            if dimensao == 1:
                if not np.isscalar(d):
                    raise UnsupportedError("❌ Cena 2D exige base 2D.")
                saida.append((w, d - ex))
                continue
            x, y = (d, 0.0) if np.isscalar(d) else d
            x, y = x - ex, y - ey
            saida.append((w, (cos_r * x - sin_r * y, sin_r * x + cos_r * y)))
        return saida

    return base_params, relativas


def base_padrao(psf: PSF, cutoff: int = 20, dimensionality: int = 1) -> ModeBasis:
    """Base HG casada (gaussiana) ou base adaptada à PSF (sinc, amostrada)."""
    if psf.kind is PSFKind.GAUSSIAN:
        return ModeBasis(BasisKind.HERMITE_GAUSSIAN, psf.width_param, cutoff, dimensionality)
    return ModeBasis(BasisKind.PSF_ADAPTED, psf.width_param, cutoff, dimensionality)


def registrar_vazamento(receptor: str, vazamento: float) -> dict[str, object]:
    """Metadados de vazamento; registra aviso quando acima de 1e-3."""
    metadados: dict[str, object] = {"leakage": float(vazamento)}
    if vazamento > LIMITE_VAZAMENTO:
        mensagem = f"vazamento do corte {vazamento:.3e} > {LIMITE_VAZAMENTO:g}"
        logger.warning("⚠️ %s: %s", receptor, mensagem)
        metadados["warnings"] = [mensagem]
    return metadados
