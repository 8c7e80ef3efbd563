"""
Módulo `quantum`

Expoentes quânticos: QCE para primeira hipótese pura, regra M-ária, entropias
relativas do teste estrela/exoplaneta (fórmulas de ordem dominante e valores
exatos) e matriz de QCE de ordem dominante para bibliotecas de imagens.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=invalid-name

import logging
from typing import Mapping, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.models import (PSF, ExoplanetEntropies, ExponentReport, IntensityGrid,
                                QuantumStateModel, StateRepresentation)
from subrayleigh.optics import malha_por_intervalos
from subrayleigh.scene import second_moments

logger = logging.getLogger(__name__)


def qce(h1: QuantumStateModel, h2: Optional[QuantumStateModel] = None,
        params1: Optional[Mapping[str, float]] = None,
        params2: Optional[Mapping[str, float]] = None) -> ExponentReport:
    """
    Expoente de Chernoff quântico com H₁ puro: ξ_Q = −log⟨ψ|ρ̂₂|ψ⟩.

    Para H₁ = |ψ_{d₀}⟩ e ρ̂₂ = Σ w_k|ψ_{d_k}⟩⟨ψ_{d_k}|, ⟨ψ|ρ̂₂|ψ⟩ = Σ w_k C(d_k − d₀)².
    Para dois estados coerentes, ξ_Q = ∫|α₁ − α₂|²dx.

    Raises:
        UnsupportedError: H₁ misto, ou representações diferentes.
    """
    h2 = h1 if h2 is None else h2
    if h1.representation is not h2.representation:
        raise UnsupportedError("❌ QCE entre representações diferentes não é suportado.")
    coef1, desl1 = h1.state(params1)
    coef2, desl2 = h2.state(params2)

    if h1.representation is StateRepresentation.COHERENT:
        coef = np.concatenate([coef1, -coef2])
        desl = np.concatenate([desl1, desl2])
        G = np.asarray(h1.psf.overlap(desl[None, :] - desl[:, None]), dtype=float)
        valor = max(float(np.real(np.conj(coef) @ G @ coef)), 0.0)
        return ExponentReport(valor, float("nan"), "coherent-overlap")

    if not h1.is_pure(params1):
        raise UnsupportedError("❌ QCE implementado apenas com a primeira hipótese pura.")
    d0 = float(desl1[coef1.real > 0][0])
    pesos = coef2.real
    C = np.asarray(h2.psf.overlap(desl2 - d0), dtype=float)
    # Σ w_k = 1, logo ⟨ψ|ρ̂₂|ψ⟩ − 1 = Σ w_k (C_k² − 1)
    deficit = float(np.sum(pesos * (C * C - 1.0)))
    valor = float("inf") if deficit <= -1.0 else max(-float(np.log1p(deficit)), 0.0)
    return ExponentReport(valor, float("nan"), "pure-overlap", infinite=np.isinf(valor))


def m_ary_qce(pairwise) -> float:
    """
    ξ_{Q,M} = min_{i≠j} ξ_{Q,(i,j)}.

    Raises:
        DomainError: Matriz não quadrada, não simétrica, diagonal não nula ou M < 2.
    """
    matriz = np.asarray(pairwise, dtype=float)
    if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
        raise DomainError("❌ A matriz de expoentes deve ser quadrada.")
    M = matriz.shape[0]
    if M < 2:
        raise DomainError("❌ São necessárias ao menos duas hipóteses.")
    if not np.allclose(matriz, matriz.T, atol=1e-12) or np.any(np.diag(matriz) != 0):
        raise DomainError("❌ A matriz deve ser simétrica com diagonal nula.")
    return float(np.min(matriz[~np.eye(M, dtype=bool)]))


def exoplanet_relative_entropies(b: float, theta: float, delta_k: float) -> ExoplanetEntropies:
    """
    Entropias relativas de ordem dominante para o teste estrela × estrela+exoplaneta.

    Quântica: (1 − e^{−θ²Δk²/16})·b. Imagem direta: ½(e^{θ²Δk²/4} − 1)·b².
    Os restos O(b²) e O(b³) são descartados. Nesta forma θ segue a convenção
    das fórmulas publicadas; para a PSF gaussiana de `make_gaussian_psf` o
    argumento equivale a 4× a separação de `exoplanet_relative_entropies_exact`.
    """
    if not 0.0 < b < 1.0:
        raise DomainError(f"❌ b deve estar em (0, 1): {b}")
    u = (theta * delta_k) ** 2
    return ExoplanetEntropies(quantum=float(-np.expm1(-u / 16.0) * b),
                              direct=float(0.5 * np.expm1(u / 4.0) * b * b),
                              leading_order=True)


def _quantica_exata(b: float, c: float) -> float:
    """−⟨ψ₀|log ρ̂₂|ψ₀⟩ no subespaço gerado por ψ₀ e ψ_θ, com ⟨ψ₀|ψ_θ⟩ = c."""
    G = np.array([[1.0, c], [c, 1.0]])
    raiz_w = np.sqrt([1.0 - b, b])
    autovalores, vetores = np.linalg.eigh(raiz_w[:, None] * G * raiz_w[None, :])
    total = 0.0
    for lam, u in zip(autovalores, vetores.T):
        projecao = float((G @ (raiz_w * u))[0])
        peso = projecao * projecao / lam if lam > 1e-300 else 0.0
        if peso <= 1e-15:
            continue
        total -= peso * np.log(lam)
    return max(total, 0.0)


def exoplanet_relative_entropies_exact(b: float, theta: float, psf: PSF,
                                       nos: int = 16) -> ExoplanetEntropies:
    """
    Entropias relativas exatas (sem truncamento em b).

    Quântica por decomposição espectral de ρ̂₂ no subespaço de dimensão 2;
    clássica pela divergência KL de f₀ contra (1 − b)f₀ + b·f_θ numa malha de
    Gauss–Legendre.
    """
    if not 0.0 < b < 1.0:
        raise DomainError(f"❌ b deve estar em (0, 1): {b}")
    c = float(psf.overlap(theta))
    quantica = _quantica_exata(b, c)

    hw = psf.half_window()
    a, fim = min(0.0, theta) - hw, max(0.0, theta) + hw
    painel = 0.25 / psf.delta_k
    quebras = np.union1d(np.linspace(a, fim, int(np.ceil((fim - a) / painel)) + 1),
                         [q for q in (0.0, theta) if a < q < fim])
    x, w = malha_por_intervalos(quebras, nos=nos)
    f0 = psf.intensity(x)
    ft = psf.intensity(x - theta)
    positivo = f0 > 0
    r = b * (ft[positivo] / f0[positivo] - 1.0)
    classica = float(np.sum(w[positivo] * f0[positivo] * (r - np.log1p(r))))
    return ExoplanetEntropies(quantum=quantica, direct=max(classica, 0.0), leading_order=False)


def leading_order_qce_grids(grids: Sequence[IntensityGrid], delta_k: float) -> np.ndarray:
    """
    Matriz de QCE de ordem dominante para uma biblioteca de imagens.

    Com A_{j,a} = m_{j,a²}Δk² (a ∈ {x, y}),
    ξ_{jk} = max_s Σ_a [s·A_{j,a} + (1−s)·A_{k,a} − A_{j,a}^s A_{k,a}^{1−s}].
    """
    if len(grids) < 2:
        raise DomainError("❌ A biblioteca precisa de ao menos duas imagens.")
    A = np.array([second_moments(g) for g in grids]) * delta_k ** 2
    M = len(grids)
    matriz = np.zeros((M, M))
    for j in range(M):
        for k in range(j + 1, M):
            aj, ak = A[j], A[k]

            def negativo(s, aj=aj, ak=ak):
                return -float(np.sum(s * aj + (1.0 - s) * ak
                                     - np.power(aj, s) * np.power(ak, 1.0 - s)))
            res = minimize_scalar(negativo, bounds=(0.0, 1.0), method="bounded",
                                  options={"xatol": 1e-8})
            matriz[j, k] = matriz[k, j] = max(-float(res.fun), 0.0)
    logger.debug("Matriz de QCE de ordem dominante %dx%d calculada.", M, M)
    return matriz
