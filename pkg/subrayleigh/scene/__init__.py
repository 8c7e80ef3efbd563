"""
Pacote `scene`

Modelos paramétricos de fontes e suas operações (componentes de mistura,
segundos momentos, construtores auxiliares).

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .operations import (grid_to_constellation, linear_constellation, mixture_components,
                         parametrized_components, second_moments, shift_scene, symmetrize)

__all__ = ["grid_to_constellation", "linear_constellation", "mixture_components",
           "parametrized_components", "second_moments", "shift_scene", "symmetrize"]
