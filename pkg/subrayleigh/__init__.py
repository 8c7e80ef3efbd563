"""
Pacote `subrayleigh`

Limites de resolução de fontes sub-Rayleigh: informação de Fisher clássica e
quântica, expoentes de erro de testes de hipóteses, estimadores simulados por
Monte Carlo e reconstrução de objetos estendidos a partir de momentos
Hermite-Gauss.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

__version__ = "0.1.0"
