"""
Módulo `quantum`

Modelos de estado quântico e informação de Fisher quântica.

- Misturas Σ w_k|ψ_{d_k}⟩⟨ψ_{d_k}|: fidelidade de Uhlmann F = ‖M‖²_*, com
  M_ij = √(w_i w'_j)·C(d'_j − d_i) e ‖·‖_* a norma nuclear (soma dos valores
  singulares). Para posto ≤ 2 isto coincide com a forma fechada 2×2.
- Estados coerentes α(x) = Σ α_k ψ(x − d_k): F = exp(−∫|α − α'|²dx).
- QFI: I_Q = −2·∂²F/∂Δθ², por segunda diferença central com Richardson.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=invalid-name

import logging
from typing import Mapping, Optional

import numpy as np

from subrayleigh.errors import DomainError, NumericalError, UnsupportedError
from subrayleigh.models import (PSF, CoherentPairScene, Normalization, PSFKind,
                                QuantumStateModel, Scene, StateRepresentation)
from subrayleigh.optics import integrar
from subrayleigh.scene import parametrized_components

logger = logging.getLogger(__name__)


def mixture_model_from_scene(scene: Scene, psf: PSF) -> QuantumStateModel:
    """Estado de um fóton de uma cena incoerente 1D (mistura de PSFs deslocadas)."""
    base_params, comps = parametrized_components(scene)
    return QuantumStateModel(StateRepresentation.MIXTURE, psf, comps, base_params)


def localization_model(psf: PSF, x0: float = 0.0) -> QuantumStateModel:
    """Fonte única em x0; parâmetro "x0"."""
    return QuantumStateModel(StateRepresentation.MIXTURE, psf,
                             lambda p: [(1.0, p["x0"])], {"x0": float(x0)})


def exoplanet_model(b: float, theta: float, psf: PSF) -> QuantumStateModel:
    """Estrela em 0 e exoplaneta em θ: (1−b)|ψ₀⟩⟨ψ₀| + b|ψ_θ⟩⟨ψ_θ|."""
    if not 0.0 < b < 1.0:
        raise DomainError(f"❌ b deve estar em (0, 1): {b}")
    return QuantumStateModel(StateRepresentation.MIXTURE, psf,
                             lambda p: [(1.0 - p["b"], 0.0), (p["b"], p["theta"])],
                             {"b": float(b), "theta": float(theta)})


def coherent_model(scene: CoherentPairScene, psf: PSF,
                   normalization: Normalization = Normalization.PER_EMITTED) -> QuantumStateModel:
    """
    Par totalmente coerente como estado coerente multimodo.

    α(x) = √(N/2)·[ψ(x − c − θ/2) + γ*·ψ(x − c + θ/2)], com |γ| = 1.

    Raises:
        UnsupportedError: |γ| < 1 (estado parcialmente coerente não é puro;
            use `qfi_partial_coherence_bound`).
    """
    if abs(abs(scene.gamma) - 1.0) > 1e-12:
        raise UnsupportedError(
            "❌ Estado coerente puro exige |γ| = 1; use qfi_partial_coherence_bound.")
    amplitude = np.sqrt(scene.mean_photons / 2.0)
    fase = np.conj(complex(scene.gamma))

    def componentes(p):
        c, t = p["centroid"], p["theta"]
        return [(amplitude, c + t / 2.0), (amplitude * fase, c - t / 2.0)]

    return QuantumStateModel(StateRepresentation.COHERENT, psf, componentes, scene.params(),
                             mean_photons=scene.mean_photons, normalization=normalization)


def _sobreposicao(psf: PSF, d_a: np.ndarray, d_b: np.ndarray) -> np.ndarray:
    """Matriz C(d_b[j] − d_a[i])."""
    return np.asarray(psf.overlap(d_b[None, :] - d_a[:, None]), dtype=float)


def fidelity(model: QuantumStateModel, params_a: Optional[Mapping[str, float]] = None,
             params_b: Optional[Mapping[str, float]] = None) -> float:
    """
    Fidelidade entre os estados do modelo em dois pontos de parâmetros.

    Returns:
        float: F ∈ [0, 1].
    """
    coef_a, desl_a = model.state(params_a)
    coef_b, desl_b = model.state(params_b)
    if model.representation is StateRepresentation.COHERENT:
        # ∫|α−α'|² = Σ c_i c_j* C(d_i − d_j) sobre a concatenação (α, −α')
        coef = np.concatenate([coef_a, -coef_b])
        desl = np.concatenate([desl_a, desl_b])
        G = _sobreposicao(model.psf, desl, desl)
        distancia = float(np.real(np.conj(coef) @ G @ coef))
        return float(np.exp(-max(distancia, 0.0)))
    wa = np.sqrt(np.clip(coef_a.real, 0.0, None))
    wb = np.sqrt(np.clip(coef_b.real, 0.0, None))
    M = wa[:, None] * _sobreposicao(model.psf, desl_a, desl_b) * wb[None, :]
    nuclear = float(np.sum(np.linalg.svd(M, compute_uv=False)))
    return min(nuclear * nuclear, 1.0)


def qfi_from_fidelity(model: QuantumStateModel, theta0: Optional[float] = None,
                      step: Optional[float] = None, param: str = "theta",
                      params: Optional[Mapping[str, float]] = None) -> float:
    """
    QFI por segunda diferença da fidelidade, com extrapolação de Richardson.

    I_Q ≈ −2·[F(θ,θ+h) − 2 + F(θ,θ−h)]/h²; o resultado de Richardson é
    [4·I(h/2) − I(h)]/3. Para estados coerentes a normalização segue
    `model.normalization` (por fóton emitido, por fóton detectado ou total).

    Raises:
        NumericalError: Cancelamento catastrófico (1 − F abaixo de ~1e-13); use h maior.
    """
    ponto = model.params(params)
    if param not in ponto:
        raise DomainError(f"❌ Parâmetro '{param}' não pertence ao modelo.")
    if theta0 is not None:
        ponto[param] = float(theta0)
    h = float(step) if step is not None else 1e-3 / model.psf.delta_k
    if not h > 0:
        raise DomainError(f"❌ Passo deve ser positivo: {h}")

    def segunda(hh):
        mais = dict(ponto, **{param: ponto[param] + hh})
        menos = dict(ponto, **{param: ponto[param] - hh})
        deficit = (1.0 - fidelity(model, ponto, mais)) + (1.0 - fidelity(model, ponto, menos))
        return 2.0 * deficit / (hh * hh), deficit

    I_h, deficit_h = segunda(h)
    I_meio, deficit_meio = segunda(h / 2.0)
    # F(θ,θ) = 1 por construção; déficits na ordem do arredondamento não têm sinal útil
    if 0.0 < deficit_meio < 1e-13 or 0.0 < deficit_h < 1e-13:
        raise NumericalError("❌ Cancelamento catastrófico na QFI; aumente o passo h.",
                             {"passo": h, "deficit": deficit_meio, "params": dict(ponto)})
    valor = (4.0 * I_meio - I_h) / 3.0
    if model.representation is StateRepresentation.COHERENT:
        valor = _normalizar_coerente(model, ponto, valor)
    return max(float(valor), 0.0)


def _normalizar_coerente(model: QuantumStateModel, ponto, valor: float) -> float:
    norma = Normalization(model.normalization)
    if norma is Normalization.TOTAL:
        return valor
    if norma is Normalization.PER_DETECTED:
        coef, desl = model.state(ponto)
        detectados = float(np.real(np.conj(coef) @ _sobreposicao(model.psf, desl, desl) @ coef))
        if detectados <= 0:
            raise NumericalError("❌ Nenhum fóton detectado para normalizar a QFI.",
                                 {"params": dict(ponto)})
        return valor / detectados
    return valor / model.mean_photons


def kappa(theta: float, psf: PSF) -> float:
    """
    κ(θ) = (1/Δk²)∫∂ψ(x−θ/2)/∂x·∂ψ(x+θ/2)/∂x dx, com κ(0) = 1.

    Forma fechada gaussiana: (1 − θ²Δk²)·e^{−θ²Δk²/2}; sinc no espaço k:
    (3/(W³θ³))·[(W²θ² − 2)·sen(Wθ) + 2Wθ·cos(Wθ)]; quadratura nos demais casos.
    """
    t = float(theta)
    dk = psf.delta_k
    if psf.kind is PSFKind.GAUSSIAN:
        u = (t * dk) ** 2
        return float((1.0 - u) * np.exp(-u / 2.0))
    if psf.kind is PSFKind.SINC:
        W = psf.width_param
        # ∫k²cos(kθ)dk/(2W) em [−W, W], dividido por Δk² = W²/3
        return integrar(lambda k: k * k * np.cos(k * t) / (2.0 * W), -W, W) / (dk * dk)
    a = float(psf.grid[0]) - abs(t)
    b = float(psf.grid[-1]) + abs(t)
    valor = integrar(lambda x: float(psf.derivative(x - t / 2.0) * psf.derivative(x + t / 2.0)),
                     a, b, points=[-t / 2.0, t / 2.0], limit=1000)
    return valor / (dk * dk)


def qfi_partial_coherence_bound(gamma: complex, theta: float, psf: PSF, N: float) -> float:
    """Cota superior I_Q(θ) ≤ NΔk²·{1 − Re[γκ(θ)]} para um par parcialmente coerente."""
    if abs(gamma) > 1.0 + 1e-12:
        raise DomainError(f"❌ |γ| deve ser ≤ 1, recebido {abs(gamma):.6g}")
    return float(N * psf.delta_k ** 2 * (1.0 - np.real(complex(gamma) * kappa(theta, psf))))


def qcrb_3d(delta_k: float, k_wavenumber: float, N: float) -> np.ndarray:
    """QCRB 3D da abertura gaussiana: (1/N)·diag(1/Δk², 1/Δk², k²/Δk⁴)."""
    if not (delta_k > 0 and k_wavenumber > 0 and N > 0):
        raise DomainError("❌ Δk, k e N devem ser positivos.")
    return np.diag([1.0 / delta_k ** 2, 1.0 / delta_k ** 2,
                    k_wavenumber ** 2 / delta_k ** 4]) / N
