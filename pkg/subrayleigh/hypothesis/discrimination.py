"""
Módulo `discrimination`

Experimento de discriminação simulado: para cada N, sorteia registros sob H₁
e H₂ (na proporção das probabilidades a priori), decide pelo teste da razão
de verossimilhança (empates → H₁) e ajusta −log P_e ≈ ξN + const por
regressão linear.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Sequence

import numpy as np
from scipy.stats import linregress

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.measure import sample_counts
from subrayleigh.models import BudgetMode, DiscriminationResult, HypothesisPair, OutcomePMF
from subrayleigh.utils.rng import blocos, gerador, mapear_ordenado

logger = logging.getLogger(__name__)

MINIMO_PONTOS = 4


def _log_razao(p1: np.ndarray, p2: np.ndarray) -> np.ndarray:
    """log(p₁/p₂) por resultado, com ±inf onde apenas uma lei se anula."""
    saida = np.zeros_like(p1)
    ambos = (p1 > 0) & (p2 > 0)
    saida[ambos] = np.log(p1[ambos]) - np.log(p2[ambos])
    saida[(p1 > 0) & (p2 <= 0)] = np.inf
    saida[(p1 <= 0) & (p2 > 0)] = -np.inf
    return saida


def _razao_discreta(h1: OutcomePMF, h2: OutcomePMF, contagens: np.ndarray, N: int,
                    poisson: bool) -> np.ndarray:
    p1 = np.clip(h1.probabilities(), 0.0, None)
    p2 = np.clip(h2.probabilities(), 0.0, None)
    lr = _log_razao(p1, p2)
    with np.errstate(invalid="ignore"):
        termos = np.where(contagens > 0, contagens * lr[None, :], 0.0)
    llr = termos.sum(axis=1)
    if poisson:
        llr = llr - N * (p1.sum() - p2.sum())
    return llr


def _razao_continua(h1: OutcomePMF, h2: OutcomePMF, verdadeira: OutcomePMF, N: int,
                    n_ensaios: int, rng: np.random.Generator, poisson: bool) -> np.ndarray:
    params = verdadeira.params()
    llr = np.empty(n_ensaios)
    for t in range(n_ensaios):
        n = int(rng.poisson(N)) if poisson else int(N)
        x = verdadeira.sampler(params, n, rng)
        f1 = h1.density(x)
        f2 = h2.density(x)
        with np.errstate(divide="ignore"):
            llr[t] = float(np.sum(np.log(f1) - np.log(f2))) if n else 0.0
    return llr


def _erros_bloco(tarefa) -> int:
    """Número de decisões erradas num bloco de ensaios sob a hipótese `qual`."""
    pair, qual, N, tamanho, semente, modo = tarefa
    rng = gerador(*semente)
    h1, h2 = pair.h1, pair.h2
    verdadeira = h1 if qual == 0 else h2
    poisson = modo is BudgetMode.POISSON or verdadeira.poisson_intensity
    if verdadeira.is_discrete:
        contagens = sample_counts(verdadeira, None, N, tamanho, modo, rng)
        llr = _razao_discreta(h1, h2, contagens, N, poisson)
    else:
        llr = _razao_continua(h1, h2, verdadeira, N, tamanho, rng, poisson)
    decide_h1 = ~(llr < 0)
    return int(np.sum(~decide_h1)) if qual == 0 else int(np.sum(decide_h1))


def simulate_discrimination(pair: HypothesisPair, photons: Sequence[int], trials: int,
                            seed: int = 0,
                            budget_mode: BudgetMode = BudgetMode.FIXED) -> DiscriminationResult:
    """
    Taxa de erro empírica do teste da razão de verossimilhança e expoente ajustado.

    Args:
        pair (HypothesisPair): Duas leis de resultados (com parâmetros fixados) e prioris.
        photons (Sequence[int]): Ao menos quatro valores de N.
        trials (int): Ensaios por N, divididos entre H₁ e H₂ conforme a priori.
        seed (int): Semente mestre; o bloco b da hipótese h no ponto i usa o fluxo
            (seed, i, h, b).
        budget_mode (BudgetMode): fixed-N ou poisson-N.

    Returns:
        DiscriminationResult: P_e por N, expoente ajustado e seu erro padrão. Se não
        houver erros no maior N, `lower_bound=True`.
    """
    if not isinstance(pair.h1, OutcomePMF) or not isinstance(pair.h2, OutcomePMF):
        raise UnsupportedError("❌ A simulação exige leis de resultados clássicas.")
    Ns = np.asarray(sorted({int(n) for n in photons}))
    if len(Ns) < MINIMO_PONTOS:
        raise DomainError(f"❌ São necessários ao menos {MINIMO_PONTOS} valores de N.")
    if Ns[0] <= 0 or trials < 2:
        raise DomainError("❌ N e o número de ensaios devem ser positivos.")
    modo = BudgetMode(budget_mode)
    pi1, pi2 = pair.prior
    n1 = min(max(int(round(trials * pi1)), 1), trials - 1)
    por_hipotese = (n1, trials - n1)

    tarefas, indices = [], []
    for i, N in enumerate(Ns):
        for qual, n_h in enumerate(por_hipotese):
            for b, tamanho in enumerate(blocos(n_h)):
                tarefas.append((pair, qual, int(N), tamanho, (seed, i, qual, b), modo))
                indices.append((i, qual))
    erros_blocos = mapear_ordenado(_erros_bloco, tarefas)

    erros = np.zeros((len(Ns), 2))
    for (i, qual), e in zip(indices, erros_blocos):
        erros[i, qual] += e
    taxas = pi1 * erros[:, 0] / por_hipotese[0] + pi2 * erros[:, 1] / por_hipotese[1]
    logger.info("🔁 Discriminação: P_e = %s", np.array2string(taxas, precision=4))

    cota_inferior = bool(taxas[-1] == 0.0)
    validos = taxas > 0
    if np.count_nonzero(validos) >= 2:
        ajuste = linregress(Ns[validos], -np.log(taxas[validos]))
        expoente, erro = float(ajuste.slope), float(ajuste.stderr)
    else:
        expoente, erro = float(np.log(trials) / Ns[-1]), float("nan")
    if cota_inferior:
        logger.warning("⚠️ Nenhum erro em N = %d; expoente reportado como cota inferior.", Ns[-1])
    return DiscriminationResult(photons=Ns, error_rates=taxas, fitted_exponent=expoente,
                                stderr=erro, lower_bound=cota_inferior, trials=int(trials),
                                seed=int(seed))
