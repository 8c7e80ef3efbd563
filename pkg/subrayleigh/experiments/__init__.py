"""
Pacote `experiments`

Drivers dos experimentos executados pela linha de comando.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .experimentos import (construir_psf, construir_receptor, objeto_duas_barras,
                           simular_adaptativo, simular_bounds, simular_chernoff,
                           simular_coerencia, simular_discriminacao, simular_momentos,
                           simular_mse, simular_reconstrucao, simular_registros)

__all__ = [
    "construir_psf", "construir_receptor", "objeto_duas_barras",
    "simular_adaptativo", "simular_bounds", "simular_chernoff", "simular_coerencia",
    "simular_discriminacao", "simular_momentos", "simular_mse", "simular_reconstrucao",
    "simular_registros",
]
