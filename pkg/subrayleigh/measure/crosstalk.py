"""
Módulo `crosstalk`

Transformações pós-separação aplicadas a leis discretas: crosstalk modal
como matriz de confusão estocástica (p' = pᵀX) e restrição a um subconjunto
de resultados.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Sequence

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.measure.parity import DISCARD
from subrayleigh.models import OutcomePMF, validar_estocastica

logger = logging.getLogger(__name__)


def apply_crosstalk(pmf: OutcomePMF, X) -> OutcomePMF:
    """
    Aplica uma matriz de crosstalk estocástica por linhas.

    X pode cobrir todos os resultados ou apenas os resultados retidos (sem os
    canais de descarte); neste caso os descartes não são misturados.

    Args:
        pmf (OutcomePMF): Lei discreta.
        X (array-like): Matriz estocástica K × K.

    Returns:
        OutcomePMF: Nova lei com `law(params) = law₀(params) @ X`.

    Raises:
        DomainError: Lei contínua, dimensão incompatível ou matriz não estocástica.
    """
    if not pmf.is_discrete:
        raise DomainError("❌ Crosstalk só se aplica a leis discretas.")
    X = validar_estocastica(X)
    K = len(pmf.labels)
    retidos = [i for i, r in enumerate(pmf.labels) if r not in pmf.discard_labels]
    if X.shape[0] == K:
        completa = X
    elif X.shape[0] == len(retidos):
        completa = np.eye(K)
        completa[np.ix_(retidos, retidos)] = X
    else:
        raise DomainError(
            f"❌ Crosstalk {X.shape} incompatível com {K} resultados ({len(retidos)} retidos).")
    if np.array_equal(completa, np.eye(K)):
        return pmf
    lei_original = pmf.law

    def lei(p):
        return np.asarray(lei_original(p), dtype=float) @ completa

    metadados = dict(pmf.metadata)
    metadados["crosstalk"] = True
    logger.debug("Crosstalk %s aplicado ao receptor %s.", X.shape, pmf.receiver)
    return pmf.evolve(law=lei, metadata=metadados)


def restrict_outcomes(pmf: OutcomePMF, labels: Sequence[str]) -> OutcomePMF:
    """
    Mantém apenas os resultados indicados.

    Para leis de intensidade Poisson os demais canais são simplesmente
    ignorados (contagens independentes). Para leis normalizadas o restante é
    agregado num canal "discard", preservando a soma unitária.
    """
    if not pmf.is_discrete:
        raise DomainError("❌ Restrição de resultados requer lei discreta.")
    faltando = [r for r in labels if r not in pmf.labels]
    if faltando:
        raise DomainError(f"❌ Resultados desconhecidos: {faltando}")
    indices = [pmf.labels.index(r) for r in labels]
    lei_original = pmf.law
    if pmf.poisson_intensity:
        return pmf.evolve(law=lambda p: np.asarray(lei_original(p))[indices],
                          labels=tuple(labels), discard_labels=())

    def lei(p):
        valores = np.asarray(lei_original(p))
        mantidos = valores[indices]
        return np.append(mantidos, max(1.0 - mantidos.sum(), 0.0))

    return pmf.evolve(law=lei, labels=tuple(labels) + (DISCARD,), discard_labels=(DISCARD,))
