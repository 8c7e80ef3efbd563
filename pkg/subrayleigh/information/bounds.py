"""
Módulo `bounds`

Cotas sobre o erro quadrático médio: Cramér-Rao corrigida por viés,
van Trees (bayesiana) e montagem do `BoundReport` com verificação de que
CRB − QCRB é semidefinida positiva.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Mapping, Optional

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.models import BoundReport, FisherMatrix

logger = logging.getLogger(__name__)

FOLGA_PSD = 1e-8


def bias_corrected_crb(bias, bias_derivative, I, N):
    """
    MSE ≥ (1 + b')²/(N·I) + b².

    Aceita escalares ou vetores (curva sobre uma grade de θ). Com I = 0 e
    1 + b' = 0 o primeiro termo é tomado como zero (estimador constante).
    """
    b = np.asarray(bias, dtype=float)
    db = np.asarray(bias_derivative, dtype=float)
    info = np.asarray(I, dtype=float)
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    numerador = (1.0 + db) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        termo = np.where(numerador == 0.0, 0.0, numerador / (N * info))
    resultado = termo + b * b
    return float(resultado) if resultado.ndim == 0 else resultado


def van_trees_bound(prior_info: float, mean_fisher: float, N: float) -> float:
    """E_q(MSE) ≥ 1/(N·E_q(I) + J)."""
    if prior_info < 0 or mean_fisher < 0:
        raise DomainError("❌ J e E_q(I) devem ser não negativos.")
    denominador = N * mean_fisher + prior_info
    return float("inf") if denominador == 0 else 1.0 / denominador


def gaussian_prior_information(tau: float) -> float:
    """Informação de uma priori gaussiana de desvio τ: J = 1/τ²."""
    if not tau > 0:
        raise DomainError(f"❌ τ deve ser positivo: {tau}")
    return 1.0 / (tau * tau)


def build_bound_report(fisher: FisherMatrix, N: float, qfi: Optional[np.ndarray] = None,
                       bias_corrected: Optional[float] = None,
                       van_trees: Optional[float] = None,
                       provenance: Optional[Mapping[str, str]] = None) -> BoundReport:
    """
    Monta o relatório de cotas para N fótons.

    Args:
        fisher (FisherMatrix): Informação de Fisher por fóton do receptor.
        N (float): Número de fótons.
        qfi (array, opcional): QFI por fóton (escalar ou matriz); QCRB = QFI⁻¹/N.
        bias_corrected (float, opcional): Cota corrigida por viés já avaliada.
        van_trees (float, opcional): Cota de van Trees já avaliada.
        provenance (dict, opcional): Origem de cada entrada.

    Returns:
        BoundReport: Com `psd_violation` = menor autovalor de CRB − QCRB.
    """
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    crb = fisher.crb(N)
    qcrb = None
    violacao = 0.0
    if qfi is not None:
        q = np.atleast_2d(np.asarray(qfi, dtype=float))
        qcrb = np.linalg.inv(q) / N
        diferenca = crb - qcrb
        violacao = float(np.min(np.linalg.eigvalsh(0.5 * (diferenca + diferenca.T))))
        if violacao < -FOLGA_PSD * max(1.0, float(np.max(np.abs(crb)))):
            logger.warning("⚠️ CRB − QCRB não é semidefinida positiva (λ_min = %.3e).", violacao)
    return BoundReport(params=fisher.params, photons=float(N), crb=crb, qcrb=qcrb,
                       bias_corrected=bias_corrected, van_trees=van_trees,
                       provenance=dict(provenance or {}), psd_violation=violacao)
