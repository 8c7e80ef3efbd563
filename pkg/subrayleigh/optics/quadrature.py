"""
Módulo `quadrature`

Rotinas de integração numérica compartilhadas: quadratura adaptativa
(Gauss–Kronrod, via `scipy.integrate.quad`) com detecção de falhas, malhas
compostas de Gauss–Legendre e regra de Gauss–Hermite.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad

from subrayleigh.errors import NumericalError

TOL_ABS = 1e-10


def integrar(func: Callable[[float], float], a: float, b: float,
             points: Optional[Sequence[float]] = None, epsabs: float = TOL_ABS,
             epsrel: float = 1e-10, limit: int = 500) -> float:
    """
    Integra `func` em [a, b] por quadratura adaptativa.

    Args:
        func: Integrando escalar.
        a, b: Limites finitos.
        points: Pontos internos de quebra (picos, descontinuidades).
        epsabs, epsrel: Tolerâncias.
        limit: Máximo de subintervalos.

    Returns:
        float: Valor da integral.

    Raises:
        NumericalError: A rotina não convergiu e o erro estimado é grande.
    """
    internos = None
    if points is not None:
        internos = sorted({float(p) for p in points if a < p < b}) or None
    resultado = quad(func, a, b, points=internos, epsabs=epsabs, epsrel=epsrel,
                     limit=limit, full_output=1)
    valor, erro = float(resultado[0]), float(resultado[1])
    if len(resultado) > 3 and erro > 1e-7 * max(1.0, abs(valor)):
        raise NumericalError(
            "❌ Quadratura adaptativa não convergiu.",
            {"valor": valor, "erro_estimado": erro, "intervalo": (a, b),
             "mensagem": str(resultado[3])},
        )
    if not np.isfinite(valor):
        raise NumericalError("❌ Quadratura produziu valor não finito.", {"intervalo": (a, b)})
    return valor


def malha_gauss_legendre(a: float, b: float, paineis: int = 200,
                         nos: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """
    Malha composta de Gauss–Legendre em [a, b].

    Returns:
        tuple: (nós, pesos), com Σ pesos = b − a.
    """
    t, w = leggauss(nos)
    bordas = np.linspace(a, b, paineis + 1)
    meio = 0.5 * (bordas[1:] + bordas[:-1])
    meia = 0.5 * (bordas[1:] - bordas[:-1])
    x = (meio[:, None] + meia[:, None] * t[None, :]).ravel()
    pesos = (meia[:, None] * w[None, :]).ravel()
    return x, pesos


def malha_por_intervalos(quebras: np.ndarray, nos: int = 4) -> tuple[np.ndarray, np.ndarray]:
    """Gauss–Legendre com `nos` pontos em cada intervalo entre quebras consecutivas."""
    t, w = leggauss(nos)
    quebras = np.asarray(quebras, dtype=float)
    meio = 0.5 * (quebras[1:] + quebras[:-1])
    meia = 0.5 * (quebras[1:] - quebras[:-1])
    x = (meio[:, None] + meia[:, None] * t[None, :]).ravel()
    pesos = (meia[:, None] * w[None, :]).ravel()
    return x, pesos


@dataclass(frozen=True)
class GaussHermite:
    """
    Regra de Gauss–Hermite ∫ f(t) e^{−t²} dt ≈ Σ w_i f(t_i).

    Exata para polinômios de grau ≤ 2n − 1.
    """

    n: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t, w = hermgauss(self.n)
        object.__setattr__(self, "nodes", t)
        object.__setattr__(self, "weights", w)
