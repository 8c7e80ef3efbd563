"""
Módulo `operations`

Operações sobre cenas: decomposição em componentes de mistura (peso,
deslocamento), segundos momentos de grades de intensidade e construtores
auxiliares (constelação linear, simetrização, translação).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from typing import Callable, Mapping, Union

import numpy as np

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.models import (CoherentPairScene, Constellation, IntensityGrid, Scene,
                                TwoPointScene)

Componente = tuple[float, Union[float, tuple[float, float]]]


def mixture_components(scene: Scene) -> list[Componente]:
    """
    Componentes (peso, deslocamento) da mistura incoerente da cena.

    Args:
        scene: TwoPointScene, Constellation ou IntensityGrid.

    Returns:
        list: Pesos não negativos com soma 1 e deslocamentos no plano imagem
        (magnificação unitária). Deslocamentos 2D são pares (x, y).
    """
    if isinstance(scene, TwoPointScene):
        c, t, b2 = scene.centroid, scene.separation, scene.brightness_split
        return [(1.0 - b2, c - t / 2.0), (b2, c + t / 2.0)]
    if isinstance(scene, Constellation):
        if scene.dimensionality == 1:
            return [(float(w), float(p)) for w, p in zip(scene.brightness, scene.positions)]
        return [(float(w), (float(p[0]), float(p[1])))
                for w, p in zip(scene.brightness, scene.positions)]
    if isinstance(scene, IntensityGrid):
        return mixture_components(grid_to_constellation(scene))
    raise UnsupportedError(f"❌ Cena sem decomposição incoerente: {type(scene).__name__}")


def parametrized_components(scene: Scene) -> tuple[dict[str, float],
                                                   Callable[[Mapping[str, float]],
                                                            list[Componente]]]:
    """
    Parâmetros nomeados da cena e a função params -> componentes.

    TwoPointScene expõe (centroid, theta, b2); constelações e grades expõem
    `shift`, uma translação rígida ao longo de x.
    """
    if isinstance(scene, TwoPointScene):
        def comps_par(p):
            c, t, b2 = p["centroid"], p["theta"], p["b2"]
            return [(1.0 - b2, c - t / 2.0), (b2, c + t / 2.0)]
        return scene.params(), comps_par

    base = mixture_components(scene)

    def comps_deslocados(p):
        s = p["shift"]
        saida = []
        for w, d in base:
            saida.append((w, d + s) if np.isscalar(d) else (w, (d[0] + s, d[1])))
        return saida
    return {"shift": 0.0}, comps_deslocados


def second_moments(grid: IntensityGrid) -> tuple[float, float]:
    """
    Segundos momentos centrais (m_{x²}, m_{y²}) em torno do centroide de intensidade.
    """
    X, Y = grid.coordinates()
    I = grid.values
    cx, cy = float(np.sum(I * X)), float(np.sum(I * Y))
    return float(np.sum(I * (X - cx) ** 2)), float(np.sum(I * (Y - cy) ** 2))


def linear_constellation(count: int, spacing: float, centroid: float = 0.0) -> Constellation:
    """M emissores igualmente brilhantes em linha, centrados em `centroid`."""
    if count < 1:
        raise DomainError("❌ A constelação precisa de ao menos um emissor.")
    if spacing < 0:
        raise DomainError("❌ Espaçamento deve ser não negativo.")
    posicoes = centroid + (np.arange(count) - (count - 1) / 2.0) * spacing
    pesos = np.full(count, 1.0 / count)
    pesos[-1] = 1.0 - pesos[:-1].sum()
    return Constellation(posicoes, pesos)


def grid_to_constellation(grid: IntensityGrid) -> Constellation:
    """
    Um emissor por pixel aceso. Grades de uma linha resultam em constelação 1D.
    """
    X, Y = grid.coordinates()
    acesos = grid.values > 0
    pesos = grid.values[acesos]
    pesos = pesos / pesos.sum()
    if grid.shape[0] == 1:
        return Constellation(X[acesos], pesos)
    return Constellation(np.column_stack([X[acesos], Y[acesos]]), pesos)


def symmetrize(grid: IntensityGrid) -> IntensityGrid:
    """Parte par da intensidade, [I(x, y) + I(−x, y)]/2 (reflexão em x)."""
    return IntensityGrid(0.5 * (grid.values + grid.values[:, ::-1]), grid.pixel_pitch)


def shift_scene(scene: Scene, delta: float) -> Scene:
    """Translação rígida da cena ao longo de x."""
    if isinstance(scene, TwoPointScene):
        return TwoPointScene(scene.centroid + delta, scene.separation, scene.brightness_split)
    if isinstance(scene, CoherentPairScene):
        return CoherentPairScene(scene.separation, scene.mean_photons, scene.gamma,
                                 scene.centroid + delta)
    if isinstance(scene, Constellation):
        pos = scene.positions.copy()
        if pos.ndim == 1:
            pos = pos + delta
        else:
            pos[:, 0] += delta
        return Constellation(pos, scene.brightness)
    raise UnsupportedError("❌ Translação de grades exige reamostragem; use outra cena.")
