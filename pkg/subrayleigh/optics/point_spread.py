"""
Módulo `point_spread`

Fábricas de PSF (gaussiana, sinc e amostrada), cálculo da largura de banda
RMS Δk = [∫|∂ψ/∂x|²dx]^{1/2} e função de transferência óptica (OTF).

Integrais da PSF sinc são feitas no espaço k, onde o espectro de amplitude é
um retângulo de altura 1/√(2W) em [−W, W].

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging

import numpy as np
from scipy.interpolate import CubicSpline

from subrayleigh.errors import DomainError
from subrayleigh.models import PSF, PSFKind
from subrayleigh.optics.quadrature import integrar, malha_por_intervalos

logger = logging.getLogger(__name__)


def make_gaussian_psf(sigma: float) -> PSF:
    """
    PSF gaussiana ψ(x) = (2πσ²)^{-1/4} exp(−x²/4σ²).

    Args:
        sigma (float): Desvio padrão da intensidade |ψ|².

    Returns:
        PSF: Com delta_k = 1/(2σ).

    Raises:
        DomainError: sigma não positivo.
    """
    if not sigma > 0 or not np.isfinite(sigma):
        raise DomainError(f"❌ sigma deve ser positivo e finito: {sigma}")
    return PSF(PSFKind.GAUSSIAN, float(sigma), 1.0 / (2.0 * float(sigma)))


def make_sinc_psf(k_halfwidth: float) -> PSF:
    """
    PSF sinc ψ(x) = √(W/π)·sin(Wx)/(Wx), equivalente a uma OTF retangular.

    Args:
        k_halfwidth (float): Meia-largura W do espectro de amplitude.

    Returns:
        PSF: Com delta_k = W/√3.
    """
    if not k_halfwidth > 0 or not np.isfinite(k_halfwidth):
        raise DomainError(f"❌ k_halfwidth deve ser positivo e finito: {k_halfwidth}")
    W = float(k_halfwidth)
    return PSF(PSFKind.SINC, W, W / np.sqrt(3.0))


def make_sampled_psf(x, amplitude) -> PSF:
    """
    PSF amostrada em grade uniforme com interpolação cúbica; a amplitude é
    renormalizada para norma unitária.

    Args:
        x (array-like): Posições crescentes e igualmente espaçadas.
        amplitude (array-like): Amplitudes reais.

    Returns:
        PSF: Do tipo custom-sampled.

    Raises:
        DomainError: Grade não uniforme, curta demais ou amplitude nula.
    """
    x = np.asarray(x, dtype=float)
    amp = np.asarray(amplitude, dtype=float)
    if x.ndim != 1 or x.shape != amp.shape or len(x) < 8:
        raise DomainError("❌ PSF amostrada requer ao menos 8 pares (posição, amplitude).")
    passos = np.diff(x)
    if np.any(passos <= 0) or np.ptp(passos) > 1e-6 * passos.mean():
        raise DomainError("❌ A grade da PSF amostrada deve ser uniforme e crescente.")

    nos, pesos = malha_por_intervalos(x, nos=4)
    norma2 = float(np.sum(pesos * CubicSpline(x, amp)(nos) ** 2))
    if not norma2 > 0:
        raise DomainError("❌ PSF amostrada com norma nula.")
    amp = amp / np.sqrt(norma2)
    spline = CubicSpline(x, amp)
    provisoria = PSF(PSFKind.SAMPLED, float(passos.mean()), 1.0, grid=x, samples=amp,
                     _spline=spline)
    delta_k = rms_bandwidth(provisoria)
    sigma_efetivo = 1.0 / (2.0 * delta_k)
    if passos.mean() > sigma_efetivo / 50.0:
        logger.warning("⚠️ Passo da PSF amostrada (%.3g) acima de σ/50 (%.3g).",
                       passos.mean(), sigma_efetivo / 50.0)
    return PSF(PSFKind.SAMPLED, float(passos.mean()), delta_k, grid=x, samples=amp,
               _spline=spline)


def rms_bandwidth(psf: PSF) -> float:
    """
    Largura de banda RMS Δk = [∫|∂ψ/∂x|² dx]^{1/2}.

    Para a gaussiana usa quadratura adaptativa em |x| ≤ 10σ; para a sinc, a
    forma equivalente ∫k²|ψ̂(k)|²dk/2π no suporte compacto [−W, W]; para a
    amostrada, Gauss–Legendre exato por intervalo da spline.

    Raises:
        NumericalError: Quadratura sem convergência.
    """
    if psf.kind is PSFKind.GAUSSIAN:
        janela = psf.half_window()
        valor = integrar(lambda x: float(psf.derivative(x) ** 2), -janela, janela,
                         points=[0.0])
    elif psf.kind is PSFKind.SINC:
        W = psf.width_param
        valor = integrar(lambda k: k * k / (2.0 * W), -W, W)
    else:
        nos, pesos = malha_por_intervalos(psf.grid, nos=4)
        valor = float(np.sum(pesos * psf.derivative(nos) ** 2))
    return float(np.sqrt(valor))


def optical_transfer_function(psf: PSF, k) -> np.ndarray:
    """
    OTF(k) = ∫|ψ(x)|² e^{−ikx} dx, normalizada para OTF(0) = 1.

    Formas analíticas para gaussiana (exp(−k²σ²/2)) e sinc (triângulo de
    suporte [−2W, 2W]); quadratura para a PSF amostrada.
    """
    k = np.asarray(k, dtype=float)
    if psf.kind is PSFKind.GAUSSIAN:
        return np.exp(-(k * psf.width_param) ** 2 / 2.0)
    if psf.kind is PSFKind.SINC:
        return np.clip(1.0 - np.abs(k) / (2.0 * psf.width_param), 0.0, None)
    a, b = float(psf.grid[0]), float(psf.grid[-1])
    valores = [integrar(lambda x, kk=kk: float(psf.intensity(x) * np.cos(kk * x)), a, b,
                        limit=1000)
               for kk in np.atleast_1d(k)]
    return np.asarray(valores).reshape(k.shape)


def otf_amostrada(psf: PSF, passo: float, pontos: int) -> tuple[np.ndarray, np.ndarray]:
    """
    OTF discreta: FFT de |ψ|² amostrada numa grade centrada.

    Args:
        psf (PSF): PSF.
        passo (float): Espaçamento da grade.
        pontos (int): Número de amostras.

    Returns:
        tuple: (k, OTF) com k em ordem crescente e OTF(0) = 1.
    """
    x = (np.arange(pontos) - pontos // 2) * passo
    intensidade = psf.intensity(x)
    espectro = np.fft.fft(np.fft.ifftshift(intensidade))
    espectro = np.fft.fftshift(espectro.real) / intensidade.sum()
    k = np.fft.fftshift(np.fft.fftfreq(pontos, d=passo)) * 2.0 * np.pi
    return k, espectro
