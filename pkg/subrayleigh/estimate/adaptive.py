"""
Módulo `adaptive`

Protocolo adaptativo em duas etapas: uma fração f dos fótons vai para imagem
direta (centroide pela média amostral) e o restante para um SPADE alinhado a
essa estimativa, cuja separação é estimada pela forma fechada.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Optional

import numpy as np

from subrayleigh.errors import DomainError
from subrayleigh.estimate.estimators import spade_mle_batch
from subrayleigh.measure import direct_pdf, sample_counts, spade_pmf
from subrayleigh.models import PSF, AdaptiveResult, BudgetMode, ModeBasis, TwoPointScene
from subrayleigh.utils.rng import gerador, mapear_ordenado

logger = logging.getLogger(__name__)

SPLIT_PADRAO = 0.5


def _dividir(N: int, split: float, known_centroid: Optional[float]) -> tuple[int, int]:
    if N <= 0:
        raise DomainError(f"❌ N deve ser positivo: {N}")
    if known_centroid is not None:
        return 0, int(N)
    if not 0.0 < split < 1.0:
        raise DomainError(f"❌ A fração da etapa 1 deve estar em (0, 1): {split}")
    n1 = int(round(split * N))
    return n1, int(N) - n1


def _executar(scene: TwoPointScene, psf: PSF, n1: int, n2: int, rng: np.random.Generator,
              known_centroid: Optional[float], basis: Optional[ModeBasis]) -> tuple[float, float]:
    """(ĉ, θ̂) de uma realização do protocolo."""
    if known_centroid is not None:
        centroide = float(known_centroid)
    elif n1 > 0:
        direta = direct_pdf(scene, psf)
        centroide = float(np.mean(direta.sampler(direta.params(), n1, rng)))
    else:
        centroide = scene.centroid
    if n2 == 0:
        return centroide, 0.0
    alinhada = spade_pmf(scene, psf, basis, alignment_offset=centroide - scene.centroid)
    contagens = sample_counts(alinhada, None, n2, 1, BudgetMode.FIXED, rng)
    return centroide, float(spade_mle_batch(contagens, alinhada.labels, n2, psf.delta_k)[0])


def two_stage_adaptive(scene: TwoPointScene, psf: PSF, N: int, split: float = SPLIT_PADRAO,
                       seed: int = 0, known_centroid: Optional[float] = None,
                       basis: Optional[ModeBasis] = None) -> AdaptiveResult:
    """
    Executa o protocolo em duas etapas uma vez.

    Args:
        scene (TwoPointScene): Par com centroide desconhecido pelo receptor.
        psf (PSF): PSF.
        N (int): Orçamento total de fótons.
        split (float): Fração f da etapa 1 (imagem direta), 0 < f < 1.
        seed (int): Semente.
        known_centroid (float, opcional): Centroide conhecido; dispensa a etapa 1.
        basis (ModeBasis, opcional): Base do SPADE da etapa 2.

    Returns:
        AdaptiveResult: Estimativas, fótons por etapa e desalinhamento residual.
    """
    n1, n2 = _dividir(N, split, known_centroid)
    centroide, theta = _executar(scene, psf, n1, n2, gerador(seed), known_centroid, basis)
    logger.debug("Etapa 1 com %d fótons (ĉ = %.6g), etapa 2 com %d fótons (θ̂ = %.6g).",
                 n1, centroide, n2, theta)
    return AdaptiveResult(centroid_estimate=centroide, theta_estimate=theta,
                          split=0.0 if known_centroid is not None else float(split),
                          stage1_photons=n1, stage2_photons=n2,
                          residual_offset=centroide - scene.centroid,
                          metadata={"seed": int(seed), "known_centroid": known_centroid})


def adaptive_mse(scene: TwoPointScene, psf: PSF, N: int, split: float = SPLIT_PADRAO,
                 trials: int = 1000, seed: int = 0, known_centroid: Optional[float] = None,
                 basis: Optional[ModeBasis] = None) -> dict[str, float]:
    """
    MSE do protocolo sobre `trials` realizações; o ensaio t usa o fluxo (seed, t).

    Returns:
        dict: "theta_mse", "theta_bias", "centroid_mse" e "theta_mse_stderr".
    """
    if trials <= 0:
        raise DomainError("❌ O número de ensaios deve ser positivo.")
    n1, n2 = _dividir(N, split, known_centroid)
    resultados = mapear_ordenado(
        lambda t: _executar(scene, psf, n1, n2, gerador(seed, t), known_centroid, basis),
        range(trials))
    estimativas = np.asarray(resultados)
    erro_theta = (estimativas[:, 1] - scene.separation) ** 2
    return {
        "theta_mse": float(np.mean(erro_theta)),
        "theta_bias": float(np.mean(estimativas[:, 1]) - scene.separation),
        "centroid_mse": float(np.mean((estimativas[:, 0] - scene.centroid) ** 2)),
        "theta_mse_stderr": float(np.std(erro_theta) / np.sqrt(trials)),
    }
