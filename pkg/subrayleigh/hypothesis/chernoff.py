"""
Módulo `chernoff`

Expoente de Chernoff clássico e entropia relativa entre duas leis de
resultados. Leis contínuas são discretizadas numa malha comum de
Gauss–Legendre (painéis de 1/(4Δk), quebras nas fontes das duas hipóteses) e
renormalizadas para soma 1.

    ξ = −log min_{0≤s≤1} Σ_y p₁(y)^s p₂(y)^{1−s}

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Mapping, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.models import ExponentReport, OutcomePMF
from subrayleigh.optics import malha_por_intervalos

logger = logging.getLogger(__name__)

TOL_S = 1e-6


def hipotese(pmf: OutcomePMF, **params: float) -> OutcomePMF:
    """Cópia da lei com os parâmetros fixados (ex.: `hipotese(pmf, theta=0.0)`)."""
    return pmf.evolve(base_params=pmf.params(params))


def _quebras(pmf: OutcomePMF, params: Mapping[str, float]) -> list[float]:
    extras = pmf.metadata.get("breakpoints")
    return list(extras(pmf.params(params))) if extras is not None else []


def discretizar_par(p1: OutcomePMF, p2: OutcomePMF,
                    params1: Optional[Mapping[str, float]] = None,
                    params2: Optional[Mapping[str, float]] = None,
                    nos: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """
    Vetores de probabilidade comparáveis para as duas hipóteses.

    Raises:
        DomainError: Leis discretas com rótulos diferentes ou suportes mistos.
        UnsupportedError: Leis de intensidade Poisson (soma ≠ 1).
    """
    if p1.poisson_intensity or p2.poisson_intensity:
        raise UnsupportedError("❌ Expoentes definidos apenas para leis normalizadas.")
    if p1.is_discrete != p2.is_discrete:
        raise DomainError("❌ As hipóteses devem ter o mesmo tipo de suporte.")
    if p1.is_discrete:
        if tuple(p1.labels) != tuple(p2.labels):
            raise DomainError("❌ As hipóteses devem ter os mesmos resultados.")
        return (np.clip(p1.probabilities(params1), 0.0, None),
                np.clip(p2.probabilities(params2), 0.0, None))

    a1, b1 = p1.integration_window(params1)
    a2, b2 = p2.integration_window(params2)
    a, b = min(a1, a2), max(b1, b2)
    painel = 0.25 / min(p1.delta_k, p2.delta_k)
    quebras = np.linspace(a, b, int(np.ceil((b - a) / painel)) + 1)
    internas = [q for q in _quebras(p1, params1) + _quebras(p2, params2) if a < q < b]
    x, w = malha_por_intervalos(np.union1d(quebras, internas), nos=nos)
    q1 = np.clip(p1.density(x, params1), 0.0, None) * w
    q2 = np.clip(p2.density(x, params2), 0.0, None) * w
    return q1 / q1.sum(), q2 / q2.sum()


def _log_coeficiente(p1: np.ndarray, p2: np.ndarray, comum: np.ndarray, s: float) -> float:
    """log Σ p₁^s p₂^{1−s} sobre o suporte comum, estável quando p₁ ≈ p₂."""
    a, b = p1[comum], p2[comum]
    razao = np.log(b) - np.log(a)
    return float(np.log1p(a.sum() - 1.0 + np.sum(a * np.expm1((1.0 - s) * razao))))


def chernoff_exponent(p1: OutcomePMF, p2: Optional[OutcomePMF] = None,
                      params1: Optional[Mapping[str, float]] = None,
                      params2: Optional[Mapping[str, float]] = None) -> ExponentReport:
    """
    Expoente de Chernoff ξ entre duas leis.

    Args:
        p1 (OutcomePMF): Lei sob H₁.
        p2 (OutcomePMF, opcional): Lei sob H₂ (padrão: a mesma lei de H₁).
        params1, params2 (dict, opcional): Parâmetros de cada hipótese.

    Returns:
        ExponentReport: ξ ≥ 0 e o minimizador s* ∈ [0, 1]; `infinite=True` quando os
        suportes são disjuntos.
    """
    p2 = p1 if p2 is None else p2
    q1, q2 = discretizar_par(p1, p2, params1, params2)
    comum = (q1 > 0) & (q2 > 0)
    if not np.any(comum):
        logger.info("Suportes disjuntos: ξ = ∞.")
        return ExponentReport(float("inf"), float("nan"), "disjoint-support", infinite=True)

    def objetivo(s):
        return _log_coeficiente(q1, q2, comum, s)

    res = minimize_scalar(objetivo, bounds=(0.0, 1.0), method="bounded",
                          options={"xatol": TOL_S})
    candidatos = [(float(res.fun), float(res.x)), (objetivo(0.0), 0.0), (objetivo(1.0), 1.0)]
    minimo, s_estrela = min(candidatos)
    metodo = "sum" if p1.is_discrete else "gauss-legendre-grid"
    return ExponentReport(max(-minimo, 0.0), s_estrela, metodo,
                          metadata={"receiver": p1.receiver})


def relative_entropy(p1: OutcomePMF, p2: Optional[OutcomePMF] = None,
                     params1: Optional[Mapping[str, float]] = None,
                     params2: Optional[Mapping[str, float]] = None) -> float:
    """
    Divergência de Kullback–Leibler D(p₁‖p₂).

    Cada termo é escrito como p₁·(r − log(1 + r)) ≥ 0, r = (p₂ − p₁)/p₁, o que
    preserva a precisão quando as leis são quase iguais.

    Returns:
        float: D ≥ 0, ou `inf` se p₁ não é absolutamente contínua em relação a p₂.
    """
    p2 = p1 if p2 is None else p2
    q1, q2 = discretizar_par(p1, p2, params1, params2)
    positivo = q1 > 0
    if np.any(q2[positivo] <= 0):
        return float("inf")
    a, b = q1[positivo], q2[positivo]
    r = (b - a) / a
    return float(max(np.sum(a * (r - np.log1p(r))) + (1.0 - b.sum()), 0.0))


def objetivo_s(p1: np.ndarray, p2: np.ndarray, s: float) -> float:
    """log Σ p₁^s p₂^{1−s} para vetores já discretizados (convexo em s)."""
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    comum = (p1 > 0) & (p2 > 0)
    if not np.any(comum):
        return float("-inf")
    return _log_coeficiente(p1, p2, comum, s)
