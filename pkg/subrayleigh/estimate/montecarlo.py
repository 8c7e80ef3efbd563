"""
Módulo `montecarlo`

Experimentos de Monte Carlo para o erro quadrático médio de um estimador numa
grade de θ. Cada ponto i da grade é dividido em blocos; o bloco b usa o fluxo
Philox (seed, i, b) e os resultados são agregados na ordem dos blocos, de
modo que a mesma semente reproduz o `MCResult` bit a bit.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
import time
from typing import Optional, Sequence

import numpy as np

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.estimate.estimators import numeric_mle, spade_mle_batch
from subrayleigh.measure import build_pmf, sample_counts
from subrayleigh.models import (PSF, BiasCurve, BudgetMode, DetectionRecord, EstimatorKind,
                                EstimatorSpec, MCResult, OutcomePMF, Receiver, Scene)
from subrayleigh.utils.rng import blocos, gerador, mapear_ordenado

logger = logging.getLogger(__name__)

ENSAIOS_RECOMENDADOS = 1000


def _estimativas(pmf: OutcomePMF, estimator: EstimatorSpec, param: str, valor: float, N: int,
                 tamanho: int, modo: BudgetMode, rng: np.random.Generator) -> np.ndarray:
    """Estimativas de `tamanho` ensaios independentes no ponto param = valor."""
    kind = EstimatorKind(estimator.kind)
    params = pmf.params({param: valor})

    if kind is EstimatorKind.SPADE_CLOSED_FORM:
        if not pmf.is_discrete:
            raise UnsupportedError("❌ Estimador de forma fechada exige SPADE.")
        contagens = sample_counts(pmf, params, N, tamanho, modo, rng)
        return spade_mle_batch(contagens, pmf.labels, N, pmf.delta_k)

    if kind is EstimatorKind.SAMPLE_MEAN_CENTROID:
        if pmf.is_discrete:
            raise UnsupportedError("❌ Média amostral exige imagem direta.")
        saida = np.empty(tamanho)
        for t in range(tamanho):
            n = N if modo is BudgetMode.FIXED else int(rng.poisson(N))
            x = pmf.sampler(params, n, rng)
            saida[t] = float(np.mean(x)) if n else np.nan
        return saida

    saida = np.empty(tamanho)
    if pmf.is_discrete:
        contagens = sample_counts(pmf, params, N, tamanho, modo, rng)
    for t in range(tamanho):
        if pmf.is_discrete:
            registro = DetectionRecord(pmf.receiver, N, modo, 0, params, pmf.labels,
                                       counts=contagens[t])
        else:
            n = N if modo is BudgetMode.FIXED else int(rng.poisson(N))
            registro = DetectionRecord(pmf.receiver, N, modo, 0, params,
                                       positions=pmf.sampler(params, n, rng))
        saida[t] = numeric_mle(registro, pmf, estimator, param).values[param]
    return saida


def monte_carlo_mse(scene: Scene, psf: PSF, receiver: Receiver, estimator: EstimatorSpec,
                    theta_grid: Sequence[float], N: int, trials: int, seed: int = 0,
                    budget_mode: BudgetMode = BudgetMode.FIXED,
                    param: str = "theta", pmf: Optional[OutcomePMF] = None) -> MCResult:
    """
    MSE, viés e variância empíricos de um estimador ao longo da grade.

    Args:
        scene (Scene): Cena base; o parâmetro `param` é varrido pela grade.
        psf (PSF): PSF.
        receiver (Receiver): Receptor.
        estimator (EstimatorSpec): Estimador.
        theta_grid (Sequence[float]): Valores do parâmetro.
        N (int): Fótons por ensaio.
        trials (int): Ensaios por ponto da grade (abaixo de 10³ registra um aviso).
        seed (int): Semente mestre.
        budget_mode (BudgetMode): fixed-N ou poisson-N.
        param (str): Parâmetro estimado ("theta" ou "centroid").
        pmf (OutcomePMF, opcional): Lei já construída (evita reconstruí-la).

    Returns:
        MCResult: Com MSE = variância + viés² exatamente (variância com ddof = 0).
    """
    if N <= 0 or trials <= 0:
        raise DomainError("❌ N e o número de ensaios devem ser positivos.")
    if trials < ENSAIOS_RECOMENDADOS:
        logger.warning("⚠️ Apenas %d ensaios por ponto (recomendado ≥ %d); MSE com erro "
                       "estatístico elevado.", trials, ENSAIOS_RECOMENDADOS)
    grade = np.asarray(theta_grid, dtype=float)
    if grade.size == 0:
        raise DomainError("❌ Grade de θ vazia.")
    modo = BudgetMode(budget_mode)
    lei = pmf if pmf is not None else build_pmf(scene, psf, receiver)
    if param not in lei.base_params:
        raise DomainError(f"❌ Parâmetro '{param}' não pertence à lei.")

    tarefas = [(i, b, tamanho) for i in range(len(grade))
               for b, tamanho in enumerate(blocos(trials))]

    def executar(tarefa):
        i, b, tamanho = tarefa
        return _estimativas(lei, estimator, param, float(grade[i]), int(N), tamanho, modo,
                            gerador(seed, i, b))

    inicio = time.time()
    resultados = mapear_ordenado(executar, tarefas)
    por_ponto = [[] for _ in grade]
    for (i, _, _), est in zip(tarefas, resultados):
        por_ponto[i].append(est)

    media = np.empty_like(grade)
    variancia = np.empty_like(grade)
    erro_mse = np.empty_like(grade)
    for i, partes in enumerate(por_ponto):
        est = np.concatenate(partes)
        media[i] = float(np.mean(est))
        variancia[i] = float(np.var(est))
        erro_mse[i] = float(np.std((est - grade[i]) ** 2) / np.sqrt(len(est)))
    vies = media - grade
    logger.info("⏱️ Monte Carlo com %d pontos × %d ensaios em %.2f s.", len(grade), trials,
                time.time() - inicio)
    return MCResult(theta_grid=grade, mse=variancia + vies ** 2, bias=vies, variance=variancia,
                    mse_stderr=erro_mse, mean_estimate=media, trials=int(trials),
                    photons=int(N), seed=int(seed), receiver=lei.receiver,
                    estimator=EstimatorKind(estimator.kind).value)


def empirical_bias(mc: MCResult) -> BiasCurve:
    """Viés empírico, sua derivada por diferenças finitas e o erro padrão do viés."""
    if len(mc.theta_grid) < 2:
        raise DomainError("❌ A derivada do viés exige ao menos dois pontos na grade.")
    derivada = np.gradient(mc.bias, mc.theta_grid)
    erro = np.sqrt(mc.variance / max(mc.trials, 1))
    return BiasCurve(theta_grid=mc.theta_grid, bias=mc.bias, derivative=derivada, stderr=erro)
