"""
Módulo `estimators`

Estimadores de separação e centroide:

- forma fechada do SPADE, θ̂ = (2/Δk)·√(S/N), com S = Σ_n n·c_n (o bucket conta
  como M+1). Sob N fixo, S é exatamente Poisson(NQ) com Q = (θΔk/2)² no par
  igual, que é o modelo da soma de Poisson usada como oráculo;
- máxima verossimilhança numérica (varredura em grade seguida de Brent
  limitado no intervalo vizinho ao melhor ponto);
- média amostral das posições (centroide).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Mapping, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.stats import poisson

from subrayleigh.errors import DomainError
from subrayleigh.models import (DetectionRecord, EstimatorKind, EstimatorSpec, MLEResult,
                                OutcomePMF)

logger = logging.getLogger(__name__)


def pesos_modos(labels: Sequence[str]) -> np.ndarray:
    """
    Índice de modo de cada rótulo 1D ("0", "1", ..., "bucket" → M+1).

    A separação é estimada pela estatística S = Σ n·c_n, e não pela contagem
    total dos modos ímpares. Para o par gaussiano com N fixo, S ~ Poisson(NQ)
    exatamente (Q = θ²Δk²/4), o que torna `spade_poisson_mse` um oráculo exato.
    O bucket recebe peso M+1, logo a igualdade passa a ser aproximada quando Q
    deixa de ser pequeno diante do corte M.

    Raises:
        DomainError: Rótulos que não são modos HG 1D.
    """
    modos = [r for r in labels if r != "bucket"]
    try:
        indices = {r: float(int(r)) for r in modos}
    except ValueError as exc:
        raise DomainError(f"❌ Rótulos {list(labels)} não são modos HG 1D.") from exc
    bucket = max(indices.values(), default=-1.0) + 1.0
    return np.array([indices.get(r, bucket) for r in labels])


def spade_mle_batch(counts, labels: Sequence[str], N: float, delta_k: float) -> np.ndarray:
    """Versão vetorizada: `counts` (ensaios × resultados) -> θ̂ por ensaio."""
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    S = np.atleast_2d(np.asarray(counts, dtype=float)) @ pesos_modos(labels)
    return (2.0 / delta_k) * np.sqrt(S / N)


def spade_mle_separation(record: DetectionRecord, delta_k: float) -> float:
    """
    θ̂ = (2/Δk)·√(S/N); devolve 0 quando não há contagens fora do modo fundamental.

    Args:
        record (DetectionRecord): Registro de um SPADE HG 1D alinhado.
        delta_k (float): Largura de banda RMS.
    """
    return float(spade_mle_batch(record.counts, record.labels, record.photons_emitted,
                                 delta_k)[0])


def spade_poisson_mse(theta, N: float, delta_k: float) -> dict[str, np.ndarray]:
    """
    Oráculo exato para o estimador em forma fechada com S ~ Poisson(λ), λ = NΔk²θ²/4.

    Returns:
        dict: "mean", "bias", "mse" e "bias_derivative" (db/dθ, igual a −1 em θ = 0).
    """
    thetas = np.atleast_1d(np.asarray(theta, dtype=float))
    saida = {k: np.empty_like(thetas) for k in ("mean", "bias", "mse", "bias_derivative")}
    for i, t in enumerate(thetas):
        lam = N * (delta_k * t) ** 2 / 4.0
        n = np.arange(int(lam + 12.0 * np.sqrt(lam) + 40))
        pesos = poisson.pmf(n, lam)
        est = (2.0 / delta_k) * np.sqrt(n / N)
        media = float(np.sum(est * pesos))
        derivada_media = float(np.sum(est * pesos * (n - lam)) * 2.0 / t) if t != 0 else 0.0
        saida["mean"][i] = media
        saida["bias"][i] = media - t
        saida["mse"][i] = float(np.sum((est - t) ** 2 * pesos))
        saida["bias_derivative"][i] = derivada_media - 1.0
    if np.ndim(theta) == 0:
        return {k: v[0] for k, v in saida.items()}
    return saida


def log_verossimilhanca(record: DetectionRecord, pmf: OutcomePMF,
                        params: Mapping[str, float]) -> float:
    """Log-verossimilhança do registro sob a lei nos parâmetros dados (−inf se impossível)."""
    if pmf.is_discrete:
        p = np.clip(pmf.probabilities(params), 0.0, None)
        c = np.asarray(record.counts, dtype=float)
        presentes = c > 0
        if np.any(p[presentes] <= 0):
            return float("-inf")
        if pmf.poisson_intensity:
            lam = record.photons_emitted * p
            return float(np.sum(c[presentes] * np.log(lam[presentes])) - lam.sum())
        return float(np.sum(c[presentes] * np.log(p[presentes])))
    if record.positions is None:
        raise DomainError("❌ Lei contínua exige registro com posições.")
    f = pmf.density(record.positions, params)
    if np.any(f <= 0):
        return float("-inf")
    return float(np.sum(np.log(f)))


def numeric_mle(record: DetectionRecord, pmf: OutcomePMF, spec: Optional[EstimatorSpec] = None,
                param: str = "theta",
                fixed: Optional[Mapping[str, float]] = None) -> MLEResult:
    """
    Máxima verossimilhança em um parâmetro, demais parâmetros fixos.

    Args:
        record (DetectionRecord): Registro observado.
        pmf (OutcomePMF): Família de leis.
        spec (EstimatorSpec, opcional): Limites, tolerância e pontos da varredura.
        param (str): Parâmetro estimado.
        fixed (dict, opcional): Valores dos parâmetros incômodos (padrão: os da lei).

    Returns:
        MLEResult: Estimativa; verossimilhança plana devolve o limite inferior com
        `degenerate=True`.
    """
    spec = spec or EstimatorSpec(EstimatorKind.GENERIC_MLE)
    base = pmf.params(fixed)
    if param not in base:
        raise DomainError(f"❌ Parâmetro '{param}' não pertence à lei.")
    lo, hi = spec.search_bounds(pmf.delta_k)

    def ll(valor):
        return log_verossimilhanca(record, pmf, dict(base, **{param: float(valor)}))

    grade = np.linspace(lo, hi, spec.grid_points)
    valores = np.array([ll(v) for v in grade])
    finitos = np.isfinite(valores)
    if not np.any(finitos):
        logger.warning("⚠️ Log-verossimilhança infinita em toda a grade; estimativa degenerada.")
        return MLEResult({param: float(lo)}, float("-inf"), degenerate=True)
    melhor = int(np.nanargmax(np.where(finitos, valores, -np.inf)))
    amplitude = float(np.max(valores[finitos]) - np.min(valores[finitos]))
    if amplitude <= 1e-12 * max(1.0, abs(float(valores[melhor]))):
        return MLEResult({param: float(lo)}, float(valores[melhor]), degenerate=True)

    a = grade[max(melhor - 1, 0)]
    b = grade[min(melhor + 1, len(grade) - 1)]
    res = minimize_scalar(lambda v: -ll(v), bounds=(a, b), method="bounded",
                          options={"xatol": spec.tolerance})
    estimativa, valor = float(grade[melhor]), float(valores[melhor])
    if res.success and np.isfinite(res.fun) and -res.fun >= valor:
        estimativa, valor = float(res.x), float(-res.fun)
    return MLEResult({param: estimativa}, valor)


def sample_mean_centroid(record: DetectionRecord) -> float:
    """Centroide estimado pela média das posições detectadas."""
    if record.positions is None or len(record.positions) == 0:
        raise DomainError("❌ Registro sem posições para estimar o centroide.")
    return float(np.mean(record.positions))
