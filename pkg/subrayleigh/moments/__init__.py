"""
Pacote `moments`

Momentos Hermite-Gauss de objetos estendidos, estimação a partir de
contagens SPADE e reconstrução em suporte finito (variação total num
programa linear Pyomo ou NNLS com Tikhonov), com a imagem limitada por
difração como referência.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .hg_moments import (amplitude_hg, coherent_moment, estimate_moments, incoherent_moment,
                         moment_set_from_grid, odd_moment, ordens_ate)
from .reconstruction import (LAMBDA_PADRAO, METODOS, curva_l, diffraction_baseline,
                             grade_suporte, orbitas_espelhadas, reconstruct,
                             reconstruction_error, variacao_total)
from .lp_builder import SOLVER_PADRAO, build_model, solver_disponivel

__all__ = [
    "amplitude_hg", "coherent_moment", "estimate_moments", "incoherent_moment",
    "moment_set_from_grid", "odd_moment", "ordens_ate",
    "LAMBDA_PADRAO", "METODOS", "curva_l", "diffraction_baseline", "grade_suporte",
    "orbitas_espelhadas", "reconstruct", "reconstruction_error", "variacao_total",
    "SOLVER_PADRAO", "build_model", "solver_disponivel",
]
