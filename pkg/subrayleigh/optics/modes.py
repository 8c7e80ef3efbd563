"""
Módulo `modes`

Modos de Hermite-Gauss, amplitudes de sobreposição ⟨ψ_n|ψ(·−d)⟩ e
probabilidades de detecção por modo para uma fonte deslocada.

Formas fechadas:
- PSF gaussiana com base HG casada: estado coerente, a_n(d) = e^{−Q/2}(dΔk)^n/√n!,
  p_n = e^{−Q}Q^n/n!, Q = (dΔk)².
- PSF sinc com base adaptada (Legendre no espaço k): a_n(d) = √(2n+1)·j_n(Wd).
- Base de paridade: p_ímpar = [1 − C(2d)]/2, com C a autocorrelação da PSF.

Demais combinações usam quadratura adaptativa (base HG) ou a base adaptada
construída por ortogonalização QR de k^n·ψ̂(k) (PSF amostrada).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=invalid-name

import logging
import weakref

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gammaln, spherical_jn
from scipy.stats import poisson

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.models import PSF, BasisKind, ModeBasis, OverlapTable, PSFKind
from subrayleigh.optics.quadrature import GaussHermite, integrar

logger = logging.getLogger(__name__)

BUCKET = "bucket"


def _funcoes_hermite(n_max: int, u: np.ndarray) -> np.ndarray:
    """Polinômios de Hermite normalizados h_n(u) = H_n(u)/√(2^n n! √π), por recorrência."""
    u = np.asarray(u, dtype=float)
    h = np.zeros((n_max + 1,) + u.shape)
    h[0] = np.pi ** -0.25
    if n_max >= 1:
        h[1] = np.sqrt(2.0) * u * h[0]
    for n in range(1, n_max):
        h[n + 1] = np.sqrt(2.0 / (n + 1)) * u * h[n] - np.sqrt(n / (n + 1.0)) * h[n - 1]
    return h


def hg_mode(n: int, scale: float, x) -> np.ndarray:
    """
    n-ésimo modo de Hermite-Gauss, família ortonormal em L².

    ψ_n(x) = (2σ²)^{-1/4} h_n(u) e^{−u²/2}, u = x/(√2σ); ψ_0 é a PSF gaussiana
    e ψ_1 = −(1/Δk)∂ψ/∂x.

    Args:
        n (int): Índice do modo (≥ 0).
        scale (float): σ da base.
        x (float | np.ndarray): Posição.

    Returns:
        np.ndarray: Amplitude real.
    """
    if n < 0:
        raise DomainError(f"❌ Índice de modo negativo: {n}")
    if not scale > 0:
        raise DomainError(f"❌ Escala da base deve ser positiva: {scale}")
    u = np.asarray(x, dtype=float) / (np.sqrt(2.0) * scale)
    h = _funcoes_hermite(n, u)[n]
    return (2.0 * scale * scale) ** -0.25 * h * np.exp(-u * u / 2.0)


def _verificar_casamento(psf: PSF, basis: ModeBasis) -> str:
    """Identifica o regime de cálculo e rejeita escalas incompatíveis."""
    if basis.kind in (BasisKind.HERMITE_GAUSSIAN, BasisKind.INTERLEAVED):
        if psf.kind is PSFKind.GAUSSIAN:
            if abs(basis.scale - psf.width_param) > 1e-12 * psf.width_param:
                raise DomainError(
                    f"❌ Escala da base HG ({basis.scale}) difere do σ da PSF ({psf.width_param}).")
            return "poisson"
        return "quadratura"
    if basis.kind is BasisKind.PSF_ADAPTED:
        if psf.kind is PSFKind.GAUSSIAN:
            if abs(basis.scale - psf.width_param) > 1e-12 * psf.width_param:
                raise DomainError("❌ Escala da base adaptada difere do σ da PSF.")
            return "poisson"
        if psf.kind is PSFKind.SINC:
            if abs(basis.scale - psf.width_param) > 1e-12 * psf.width_param:
                raise DomainError(
                    f"❌ Escala da base adaptada ({basis.scale}) difere de W ({psf.width_param}).")
            return "legendre"
        return "qr"
    return "paridade"


def mode_amplitudes(psf: PSF, basis: ModeBasis, d: float) -> np.ndarray:
    """
    Amplitudes a_n(d) = ∫ψ_n(x)ψ(x−d)dx para n = 0..M (base 1D).

    Raises:
        DomainError: Escala da base incompatível com a PSF.
        UnsupportedError: Base de paridade (não possui amplitudes por modo).
    """
    regime = _verificar_casamento(psf, basis)
    M = basis.cutoff
    n = np.arange(M + 1)
    d = float(d)
    if regime == "poisson":
        u = d * psf.delta_k
        if u == 0.0:
            return (n == 0).astype(float)
        log_abs = n * np.log(abs(u)) - 0.5 * gammaln(n + 1) - 0.5 * u * u
        return np.sign(u) ** n * np.exp(log_abs)
    if regime == "legendre":
        return np.sqrt(2 * n + 1.0) * spherical_jn(n, psf.width_param * d)
    if regime == "qr":
        return np.real(_amplitudes_qr(psf, M, d))
    if regime == "quadratura":
        s = basis.scale
        janela = max(10.0 * s + 2.0 * s * np.sqrt(M) + abs(d), psf.half_window() + abs(d))
        return np.array([
            integrar(lambda x, m=m: float(hg_mode(m, s, x) * psf.amplitude(x - d)),
                     -janela, janela, points=[0.0, d], epsabs=1e-12)
            for m in n
        ])
    raise UnsupportedError("❌ A base de paridade não define amplitudes por modo.")


# id(psf) -> (referência fraca, M, base); a entrada sai quando a PSF é coletada
_CACHE_QR: dict[int, tuple] = {}


def _base_adaptada_amostrada(psf: PSF, M: int):
    """
    Base adaptada a uma PSF amostrada: ortonormalização QR da família
    (−ik)^n ψ̂(k), isto é, das derivativas (−∂/∂x)^n ψ.

    Returns:
        tuple: (k, modos [len(k) × (M+1)] no espaço k, ψ̂(k), dk).
    """
    guardado = _CACHE_QR.get(id(psf))
    if guardado is not None and guardado[0]() is psf and guardado[1] >= M:
        k, modos, espectro, dk = guardado[2]
        return k, modos[:, :M + 1], espectro, dk

    dx = psf.width_param
    n_fft = 8 * int(2 ** np.ceil(np.log2(len(psf.grid))))
    amostras = np.zeros(n_fft)
    amostras[:len(psf.samples)] = psf.samples
    k = 2.0 * np.pi * np.fft.fftfreq(n_fft, d=dx)
    espectro = dx * np.fft.fft(amostras) * np.exp(-1j * k * psf.grid[0])
    dk = 2.0 * np.pi / (n_fft * dx)
    util = np.abs(espectro) > 1e-12 * np.abs(espectro).max()
    escala = np.sqrt(dk / (2.0 * np.pi))

    V = np.stack([np.where(util, (-1j * k) ** n * espectro, 0.0) for n in range(M + 1)],
                 axis=1) * escala
    Q, R = np.linalg.qr(V)
    diagonal = np.diag(R)
    modulo = np.where(np.abs(diagonal) > 0, np.abs(diagonal), 1.0)
    Q = Q * (diagonal / modulo)[None, :]
    modos = Q / escala
    if id(psf) not in _CACHE_QR:
        weakref.finalize(psf, _CACHE_QR.pop, id(psf), None)
    _CACHE_QR[id(psf)] = (weakref.ref(psf), M, (k, modos, espectro, dk))
    return k, modos, espectro, dk


def _amplitudes_qr(psf: PSF, M: int, d: float) -> np.ndarray:
    k, modos, espectro, dk = _base_adaptada_amostrada(psf, M)
    return modos.conj().T @ (espectro * np.exp(-1j * k * d)) * dk / (2.0 * np.pi)


def _probabilidades_intercaladas(a: np.ndarray, offset: int) -> np.ndarray:
    """Probabilidades dos modos (ψ_n ± ψ_{n+1})/√2 a partir das amplitudes HG."""
    M = len(a) - 1
    saida = []
    for n in range(0, offset):
        saida.append(a[n] ** 2)
    n = offset
    while n + 1 <= M:
        saida.append(0.5 * (a[n] + a[n + 1]) ** 2)
        saida.append(0.5 * (a[n] - a[n + 1]) ** 2)
        n += 2
    if n == M:
        saida.append(a[M] ** 2)
    return np.asarray(saida)


def mode_labels(basis: ModeBasis) -> tuple[str, ...]:
    """Rótulos dos resultados retidos pela base (sem o bucket)."""
    M = basis.cutoff
    if basis.kind is BasisKind.PARITY:
        return ("even", "odd")
    if basis.dimensionality == 2:
        if basis.kind is BasisKind.INTERLEAVED:
            eixo_x = mode_labels(ModeBasis(basis.kind, basis.scale, M,
                                           interleave_offset=basis.interleave_offset))
            return tuple(f"{rx};{n}" for rx in eixo_x for n in range(M + 1))
        return tuple(f"{m},{n}" for m in range(M + 1) for n in range(M + 1))
    if basis.kind is BasisKind.INTERLEAVED:
        rotulos = [str(n) for n in range(basis.interleave_offset)]
        n = basis.interleave_offset
        while n + 1 <= M:
            rotulos += [f"+{n},{n + 1}", f"-{n},{n + 1}"]
            n += 2
        if n == M:
            rotulos.append(str(M))
        return tuple(rotulos)
    return tuple(str(n) for n in range(M + 1))


def _probabilidades_1d(psf: PSF, basis: ModeBasis, d: float) -> tuple[np.ndarray, float]:
    regime = _verificar_casamento(psf, basis)
    if regime == "paridade":
        impar = 0.5 * (1.0 - float(psf.overlap(2.0 * d)))
        impar = min(max(impar, 0.0), 1.0)
        return np.array([1.0 - impar, impar]), 0.0
    if regime == "poisson" and basis.kind is not BasisKind.INTERLEAVED:
        Q = (d * psf.delta_k) ** 2
        n = np.arange(basis.cutoff + 1)
        return poisson.pmf(n, Q), float(poisson.sf(basis.cutoff, Q))
    if regime == "qr":
        p = np.abs(_amplitudes_qr(psf, basis.cutoff, d)) ** 2
        return p, float(np.clip(1.0 - p.sum(), 0.0, 1.0))
    a = mode_amplitudes(psf, basis, d)
    if regime == "poisson":
        vazamento = float(poisson.sf(basis.cutoff, (d * psf.delta_k) ** 2))
    else:
        vazamento = float(np.clip(1.0 - np.sum(a ** 2), 0.0, 1.0))
    if basis.kind is BasisKind.INTERLEAVED:
        return _probabilidades_intercaladas(a, basis.interleave_offset), vazamento
    return a ** 2, vazamento


def displaced_mode_probabilities(psf: PSF, basis: ModeBasis, d) -> np.ndarray:
    """
    Probabilidades p[n] = |⟨ψ_n|ψ(·−d)⟩|² para os resultados da base, seguidas
    do vazamento (última posição).

    Args:
        psf (PSF): PSF normalizada.
        basis (ModeBasis): Base ortonormal.
        d (float | tuple): Deslocamento; par (dx, dy) para bases 2D.

    Returns:
        np.ndarray: Vetor de tamanho len(mode_labels(basis)) + 1, soma 1.

    Raises:
        DomainError: Escala da base incompatível com a PSF.
    """
    if basis.dimensionality == 2:
        if psf.kind is not PSFKind.GAUSSIAN or basis.kind is BasisKind.PARITY:
            raise UnsupportedError("❌ Bases 2D restritas à PSF gaussiana separável.")
        dx, dy = (float(v) for v in d)
        # pares intercalados apenas ao longo de x; y sempre na base HG
        base_x = ModeBasis(basis.kind, basis.scale, basis.cutoff,
                           interleave_offset=basis.interleave_offset)
        base_y = ModeBasis(BasisKind.HERMITE_GAUSSIAN, basis.scale, basis.cutoff)
        px, lx = _probabilidades_1d(psf, base_x, dx)
        py, ly = _probabilidades_1d(psf, base_y, dy)
        return np.append(np.outer(px, py).ravel(), lx + ly - lx * ly)
    p, vazamento = _probabilidades_1d(psf, basis, float(d))
    return np.append(p, vazamento)


def overlap_table(psf: PSF, basis: ModeBasis, displacements) -> OverlapTable:
    """Tabela de amplitudes a[n][d] e vazamentos para vários deslocamentos."""
    desl = np.atleast_1d(np.asarray(displacements, dtype=float))
    amplitudes = np.stack([mode_amplitudes(psf, basis, d) for d in desl], axis=1)
    if _verificar_casamento(psf, basis) == "poisson":
        vazamento = poisson.sf(basis.cutoff, (desl * psf.delta_k) ** 2)
    else:
        vazamento = np.clip(1.0 - np.sum(amplitudes ** 2, axis=0), 0.0, 1.0)
    return OverlapTable(basis=basis, displacements=desl, amplitudes=amplitudes,
                        leakage=np.asarray(vazamento, dtype=float))


def gram_matrix(basis: ModeBasis, psf: PSF | None = None) -> np.ndarray:
    """
    Matriz de Gram dos modos retidos, por quadratura exata para o integrando.

    HG: Gauss–Hermite; base adaptada à sinc: Gauss–Legendre no espaço k;
    base adaptada amostrada: produto interno discreto no espaço k.
    """
    M = basis.cutoff
    if basis.kind is BasisKind.PARITY:
        return np.eye(2)
    if basis.kind in (BasisKind.HERMITE_GAUSSIAN, BasisKind.INTERLEAVED) or (
            basis.kind is BasisKind.PSF_ADAPTED and (psf is None or psf.kind is PSFKind.GAUSSIAN)):
        regra = GaussHermite(M + 40)
        h = _funcoes_hermite(M, regra.nodes)
        G = (h * regra.weights[None, :]) @ h.T
        if basis.kind is BasisKind.INTERLEAVED:
            T = _matriz_intercalada(M, basis.interleave_offset)
            G = T @ G @ T.T
        return G
    if psf.kind is PSFKind.SINC:
        u, w = leggauss(M + 20)
        n = np.arange(M + 1)
        P = np.stack([np.polynomial.legendre.Legendre.basis(j)(u) for j in n])
        c = np.sqrt((2 * n + 1) / 2.0)[:, None]
        return (c * P * w[None, :]) @ (c * P).T
    _, modos, _, dk = _base_adaptada_amostrada(psf, M)
    return np.real(modos.conj().T @ modos) * dk / (2.0 * np.pi)


def _matriz_intercalada(M: int, offset: int) -> np.ndarray:
    linhas = []
    for n in range(offset):
        linha = np.zeros(M + 1)
        linha[n] = 1.0
        linhas.append(linha)
    n = offset
    while n + 1 <= M:
        mais, menos = np.zeros(M + 1), np.zeros(M + 1)
        mais[[n, n + 1]] = [1.0, 1.0]
        menos[[n, n + 1]] = [1.0, -1.0]
        linhas += [mais / np.sqrt(2.0), menos / np.sqrt(2.0)]
        n += 2
    if n == M:
        linha = np.zeros(M + 1)
        linha[M] = 1.0
        linhas.append(linha)
    return np.stack(linhas)
