"""
Pacote `estimate`

Estimadores, experimentos de Monte Carlo, medição de viés e o protocolo
adaptativo em duas etapas.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .estimators import (log_verossimilhanca, numeric_mle, pesos_modos, sample_mean_centroid,
                         spade_mle_batch, spade_mle_separation, spade_poisson_mse)
from .montecarlo import empirical_bias, monte_carlo_mse
from .adaptive import SPLIT_PADRAO, adaptive_mse, two_stage_adaptive

__all__ = [
    "log_verossimilhanca", "numeric_mle", "pesos_modos", "sample_mean_centroid",
    "spade_mle_batch", "spade_mle_separation", "spade_poisson_mse",
    "empirical_bias", "monte_carlo_mse",
    "SPLIT_PADRAO", "adaptive_mse", "two_stage_adaptive",
]
