"""
Pacote `hypothesis`

Testes de hipóteses: expoentes de Chernoff clássico e quântico, entropias
relativas, regra M-ária e discriminação simulada.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .chernoff import (chernoff_exponent, discretizar_par, hipotese, objetivo_s,
                       relative_entropy)
from .quantum import (exoplanet_relative_entropies, exoplanet_relative_entropies_exact,
                      leading_order_qce_grids, m_ary_qce, qce)
from .discrimination import simulate_discrimination

__all__ = [
    "chernoff_exponent", "discretizar_par", "hipotese", "objetivo_s", "relative_entropy",
    "exoplanet_relative_entropies", "exoplanet_relative_entropies_exact",
    "leading_order_qce_grids", "m_ary_qce", "qce",
    "simulate_discrimination",
]
