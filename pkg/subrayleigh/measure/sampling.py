"""
Módulo `sampling`

Amostragem de registros de detecção a partir de leis de resultados e
serialização dos registros (um objeto JSON por linha).

Convenções de orçamento:
- fixed-N: exatamente N fótons, resultados multinomiais;
- poisson-N: número de fótons Poisson(N), equivalente a contagens Poisson
  independentes por resultado.
Leis de intensidade (pares coerentes) produzem sempre contagens Poisson com
médias N·λ.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import json
from typing import Mapping, Optional

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models import BudgetMode, DetectionRecord, OutcomePMF
from subrayleigh.utils.rng import gerador


def _probabilidades_validas(pmf: OutcomePMF, params: Optional[Mapping[str, float]]) -> np.ndarray:
    p = pmf.probabilities(params)
    if not np.all(np.isfinite(p)):
        raise DomainError(f"❌ Lei não finita nos parâmetros {params}.")
    p = np.clip(p, 0.0, None)
    if pmf.poisson_intensity:
        return p
    return p / p.sum()


def sample_counts(pmf: OutcomePMF, params: Optional[Mapping[str, float]], N: int, trials: int,
                  budget_mode: BudgetMode = BudgetMode.FIXED,
                  rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """
    Contagens de `trials` experimentos independentes, vetorizadas.

    Returns:
        np.ndarray: Matriz (trials, K) de inteiros.
    """
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    rng = rng or np.random.default_rng()
    p = _probabilidades_validas(pmf, params)
    if pmf.poisson_intensity or BudgetMode(budget_mode) is BudgetMode.POISSON:
        return rng.poisson(N * p, size=(trials, len(p)))
    return rng.multinomial(int(N), p, size=trials)


def sample_record(pmf: OutcomePMF, params: Optional[Mapping[str, float]], N: int,
                  budget_mode: BudgetMode = BudgetMode.FIXED, seed: int = 0) -> DetectionRecord:
    """
    Registro de detecção determinístico dada a semente.

    Args:
        pmf (OutcomePMF): Lei discreta ou contínua (com amostrador).
        params (dict, opcional): Parâmetros verdadeiros (padrão: os da cena).
        N (int): Orçamento nominal de fótons.
        budget_mode (BudgetMode): fixed-N ou poisson-N.
        seed (int): Semente do fluxo Philox.

    Returns:
        DetectionRecord: Contagens (discreto) ou posições (contínuo).

    Raises:
        DomainError: N ≤ 0 ou parâmetros inválidos.
    """
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    modo = BudgetMode(budget_mode)
    valores = pmf.params(params)
    rng = gerador(seed)
    if pmf.is_discrete:
        contagens = sample_counts(pmf, valores, N, 1, modo, rng)[0]
        return DetectionRecord(pmf.receiver, int(N), modo, int(seed), valores, pmf.labels,
                               counts=contagens)
    n = int(N) if modo is BudgetMode.FIXED else int(rng.poisson(N))
    posicoes = pmf.sampler(valores, n, rng)
    return DetectionRecord(pmf.receiver, int(N), modo, int(seed), valores, positions=posicoes)


def record_to_json(record: DetectionRecord) -> str:
    """Serializa o registro numa única linha JSON."""
    dados = {
        "receiver": record.receiver,
        "params": {k: float(v) for k, v in record.params.items()},
        "seed": int(record.seed),
        "budget_mode": BudgetMode(record.budget_mode).value,
        "photons_emitted": int(record.photons_emitted),
        "labels": list(record.labels),
        "counts": [] if record.counts is None else [int(c) for c in record.counts],
    }
    if record.positions is not None:
        dados["positions"] = [float(x) for x in record.positions]
    return json.dumps(dados, ensure_ascii=False)


def record_from_json(linha: str) -> DetectionRecord:
    """Reconstrói um registro a partir de uma linha JSON."""
    try:
        dados = json.loads(linha)
        posicoes = dados.get("positions")
        return DetectionRecord(
            receiver=dados["receiver"],
            photons_emitted=int(dados["photons_emitted"]),
            budget_mode=BudgetMode(dados["budget_mode"]),
            seed=int(dados["seed"]),
            params=dict(dados.get("params", {})),
            labels=tuple(dados.get("labels", ())),
            counts=None if posicoes is not None else np.asarray(dados["counts"], dtype=np.int64),
            positions=None if posicoes is None else np.asarray(posicoes, dtype=float),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise DomainError(f"❌ Registro de detecção inválido: {exc}") from exc
