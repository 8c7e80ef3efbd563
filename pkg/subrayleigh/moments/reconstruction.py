"""
Módulo `reconstruction`

Reconstrução de intensidade num suporte finito declarado a partir de um
`MomentSet`, linha de base limitada por difração e erro de reconstrução.

O problema direto é linear: cada momento é Σ_p A_ip I_p, com A_ip o peso HG
do pixel p. Fora do suporte a intensidade é nula. Duas variantes:

- "lp": desajuste L1 ponderado mais λ vezes a variação total da imagem,
  contando os saltos para zero nas bordas do suporte (programa linear Pyomo).
  A penalidade preserva bordas: entre imagens com os mesmos momentos prefere
  a de menor altura máxima, sem arredondar os degraus.
- "nnls": mínimos quadrados não negativos com Tikhonov em direção à imagem
  uniforme no suporte, sobre o sistema empilhado [W·A; √λ·s·Id; linha de soma].

Momentos só pares não distinguem I(x) de I(−x); nesse caso a imagem é
restrita ao subespaço espelhado (em x e em y), que é exatamente a parte
reconstruível. Com momentos ímpares apenas o espelho em y é imposto.

Em ambas as variantes λ → ∞ leva à imagem plana no suporte. `curva_l` varre λ
e escolhe o canto da curva L (máxima curvatura em escala log-log).

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=invalid-name

import logging
from typing import Mapping, Optional, Sequence, Union

import numpy as np
from scipy.optimize import nnls
from scipy.signal import fftconvolve

from subrayleigh.errors import DomainError
from subrayleigh.models import EVEN_ONLY, PSF, IntensityGrid, MomentSet, ReconstructionResult
from subrayleigh.moments.hg_moments import amplitude_hg
from subrayleigh.moments.lp_builder import SOLVER_PADRAO, build_model, resolver

logger = logging.getLogger(__name__)

METODOS = ("lp", "nnls")
# λ relativo à escala ||W·A|| / ||R|| do termo de dados (R: operador da penalidade)
LAMBDA_PADRAO = {"lp": 4e-2, "nnls": 1e-5}
LAMBDAS_CURVA_L = tuple(np.logspace(-6, 1, 15))
SIGMA_MINIMO = 1e-6
LIMIAR_INVIAVEL = 3.0

Suporte = Union[float, tuple[float, float]]


def grade_suporte(support: Suporte, resolution: int) -> tuple[np.ndarray, np.ndarray, float]:
    """
    Coordenadas (X, Y) dos pixels em [−Lx, Lx] × [−Ly, Ly], centradas na origem.

    `support` é a meia-largura L (1D) ou (Lx, Ly); Ly = 0 também indica 1D.
    """
    Lx, Ly = (float(support), 0.0) if np.isscalar(support) else map(float, support)
    if not Lx > 0 or Ly < 0 or resolution < 2:
        raise DomainError(f"❌ Suporte/resolução inválidos: {support}, {resolution}")
    passo = 2.0 * Lx / resolution
    nx = int(resolution)
    ny = 1 if Ly == 0 else max(1, int(round(2.0 * Ly / passo)))
    x = (np.arange(nx) - (nx - 1) / 2.0) * passo
    y = (np.arange(ny) - (ny - 1) / 2.0) * passo
    X, Y = np.meshgrid(x, y)
    return X, Y, passo


def matriz_direta(moments: MomentSet, X: np.ndarray, Y: np.ndarray) -> tuple[np.ndarray,
                                                                             np.ndarray,
                                                                             np.ndarray]:
    """(A, v, σ): linhas de P_mn seguidas das linhas de K_k."""
    dk = moments.delta_k
    u, w = X.ravel() * dk, Y.ravel() * dk
    linhas = [amplitude_hg(u, m) ** 2 * amplitude_hg(w, n) ** 2 for m, n in moments.orders]
    linhas += [amplitude_hg(u, k) * amplitude_hg(u, k + 1) * amplitude_hg(w, 0) ** 2
               for k in moments.odd_orders]
    A = np.array(linhas)
    v = np.concatenate([np.asarray(moments.values, dtype=float),
                        np.asarray(moments.odd_values, dtype=float)])
    sigma = np.concatenate([np.asarray(moments.stderr, dtype=float),
                            np.asarray(moments.odd_stderr, dtype=float)])
    return A, v, sigma


def variacao_total(ny: int, nx: int) -> np.ndarray:
    """
    Operador de primeiras diferenças da imagem achatada, incluindo os saltos
    para zero fora do suporte: ||D·I||₁ é a variação total anisotrópica.

    Linhas únicas (ny = 1) têm apenas as diferenças ao longo de x.
    """
    def d1(n):
        # n + 1 linhas: I_0, I_1 − I_0, ..., I_{n−1} − I_{n−2}, −I_{n−1}
        return np.eye(n + 1, n) - np.eye(n + 1, n, k=-1)
    blocos = [np.kron(np.eye(ny), d1(nx))]
    if ny > 1:
        blocos.append(np.kron(d1(ny), np.eye(nx)))
    return np.vstack(blocos)


def orbitas_espelhadas(ny: int, nx: int, espelhar_x: bool, espelhar_y: bool) -> np.ndarray:
    """
    Representante (menor índice) da órbita de cada pixel sob os espelhos pedidos.

    Returns:
        np.ndarray: Vetor de tamanho ny·nx; pixels da mesma órbita têm o mesmo valor.
    """
    idx = np.arange(ny * nx).reshape(ny, nx)
    imagens = [idx]
    if espelhar_x:
        imagens.append(idx[:, ::-1])
    if espelhar_y:
        imagens += [m[::-1, :] for m in list(imagens)]
    return np.minimum.reduce(imagens).ravel()


def _espelhos(moments: MomentSet, ny: int) -> tuple[bool, bool]:
    """Simetrias não observáveis pelos momentos: x sem momentos ímpares; y sempre."""
    return moments.parity == EVEN_ONLY or not moments.odd_orders, ny > 1


def _preparar(moments: MomentSet, support: Suporte, resolution: int,
              max_order: Optional[int]) -> dict:
    """Sistema linear, pesos 1/σ e órbitas de simetria da reconstrução."""
    momentos = moments.truncated(8 if max_order is None else max_order)
    X, Y, passo = grade_suporte(support, resolution)
    ny, nx = X.shape
    A, v, sigma = matriz_direta(momentos, X, Y)
    if A.shape[0] == 0:
        raise DomainError("❌ Nenhum momento para reconstruir.")
    pesos = 1.0 / (sigma + SIGMA_MINIMO)
    return {
        "A": A, "v": v, "pesos": pesos, "WA": pesos[:, None] * A,
        "D": variacao_total(ny, nx), "forma": (ny, nx), "passo": passo,
        "orbitas": orbitas_espelhadas(ny, nx, *_espelhos(momentos, ny)),
    }


def _intensidades_nnls(problema: dict, lam: float) -> np.ndarray:
    """Tikhonov em direção à imagem uniforme, resolvido por NNLS nas órbitas."""
    WA = problema["WA"]
    n_pix = WA.shape[1]
    _, coluna = np.unique(problema["orbitas"], return_inverse=True)
    S = np.zeros((n_pix, coluna.max() + 1))
    S[np.arange(n_pix), coluna] = 1.0

    norma = np.linalg.norm(WA)
    escala = np.sqrt(lam) * norma / np.sqrt(n_pix)
    sistema = np.vstack([WA @ S, escala * S, norma * S.sum(axis=0, keepdims=True)])
    alvo = np.concatenate([problema["pesos"] * problema["v"],
                           np.full(n_pix, escala / n_pix), [norma]])
    z, _ = nnls(sistema, alvo, maxiter=50 * S.shape[1])
    return S @ z


def _intensidades_lp(problema: dict, lam: float,
                     config_solver: Optional[Mapping[str, object]]) -> np.ndarray:
    """Variação total com desajuste L1, resolvida pelo Pyomo."""
    config = dict(config_solver or {})
    D = problema["D"]
    escala = np.linalg.norm(problema["WA"]) / np.linalg.norm(D)
    orbitas = problema["orbitas"]
    pares = [(int(p), int(r)) for p, r in enumerate(orbitas) if p != r]
    modelo = build_model(problema["A"], problema["v"], problema["pesos"], D, lam * escala,
                         pares)
    return resolver(modelo, str(config.get("solver_name", SOLVER_PADRAO)),
                    bool(config.get("tee", False)))


def _resolver_problema(problema: dict, lam: float, method: str,
                       config_solver: Optional[Mapping[str, object]]) -> np.ndarray:
    """Intensidades não negativas de soma 1 para um λ."""
    if method == "nnls":
        intensidades = _intensidades_nnls(problema, lam)
    elif method == "lp":
        intensidades = _intensidades_lp(problema, lam, config_solver)
    else:
        raise DomainError(f"❌ Método de reconstrução desconhecido: {method}")
    intensidades = np.clip(intensidades, 0.0, None)
    total = intensidades.sum()
    if not total > 0:
        intensidades = np.ones_like(intensidades)
        total = intensidades.sum()
    return intensidades / total


def _validar(regularization: Optional[float], method: str) -> float:
    if method not in METODOS:
        raise DomainError(f"❌ Método de reconstrução desconhecido: {method}")
    lam = LAMBDA_PADRAO[method] if regularization is None else float(regularization)
    if not lam >= 0:
        raise DomainError("❌ λ deve ser não negativo.")
    return lam


def reconstruct(moments: MomentSet, support: Suporte, resolution: int = 41,
                regularization: Optional[float] = None, method: str = "nnls",
                max_order: Optional[int] = None,
                config_solver: Optional[Mapping[str, object]] = None) -> ReconstructionResult:
    """
    Reconstrói a intensidade no suporte declarado.

    Args:
        moments (MomentSet): Momentos medidos ou exatos.
        support (float | tuple): Meia-largura L ou (Lx, Ly) do suporte.
        resolution (int): Pixels ao longo de x.
        regularization (float, opcional): λ relativo à escala do termo de dados
            (padrão: `LAMBDA_PADRAO[method]`).
        method (str): "nnls" (Tikhonov para a uniforme) ou "lp" (variação total).
        max_order (int, opcional): Trunca os momentos em m + n ≤ max_order (padrão 8).
        config_solver (dict, opcional): `solver_name` e `tee` para a variante "lp".

    Returns:
        ReconstructionResult: Imagem não negativa de soma 1; `infeasible` quando o
        resíduo ponderado excede 3 desvios por momento.

    Raises:
        DomainError: λ negativo, método desconhecido, suporte inválido ou sem momentos.
        NumericalError: Solver indisponível ou sem ótimo (variante "lp").
    """
    lam = _validar(regularization, method)
    problema = _preparar(moments, support, resolution, max_order)
    intensidades = _resolver_problema(problema, lam, method, config_solver)
    imagem = IntensityGrid(intensidades.reshape(problema["forma"]), problema["passo"])

    pesos, A, v = problema["pesos"], problema["A"], problema["v"]
    residuo = float(np.linalg.norm(pesos * (A @ intensidades - v)))
    inviavel = bool(residuo > LIMIAR_INVIAVEL * np.sqrt(len(v)))
    if inviavel:
        logger.warning("⚠️ Momentos inconsistentes com o suporte declarado (resíduo %.3e).",
                       residuo)
    logger.debug("✅ Reconstrução %s com λ = %.3g, resíduo %.3e.", method, lam, residuo)
    return ReconstructionResult(grid=imagem, residual_norm=residuo, regularization=lam,
                                method=method, infeasible=inviavel)


def curva_l(moments: MomentSet, support: Suporte, resolution: int = 41,
            lambdas: Sequence[float] = LAMBDAS_CURVA_L, method: str = "lp",
            max_order: Optional[int] = None,
            config_solver: Optional[Mapping[str, object]] = None
            ) -> tuple[float, np.ndarray, np.ndarray]:
    """
    Curva L da reconstrução: desajuste ponderado contra penalidade ao longo de λ.

    A penalidade é a variação total (lp) ou ||I − uniforme||₂ (nnls). O canto é o
    ponto interior de maior curvatura de Menger em (log desajuste, log penalidade).

    Returns:
        tuple[float, np.ndarray, np.ndarray]: λ do canto, desajustes e penalidades
        na ordem de `lambdas`.
    """
    lambdas = np.sort(np.asarray(lambdas, dtype=float))
    for lam in lambdas:
        _validar(lam, method)
    problema = _preparar(moments, support, resolution, max_order)
    pesos, A, v, D = problema["pesos"], problema["A"], problema["v"], problema["D"]
    n_pix = A.shape[1]

    desajustes, penalidades = [], []
    for lam in lambdas:
        I = _resolver_problema(problema, lam, method, config_solver)
        desajustes.append(np.linalg.norm(pesos * (A @ I - v)))
        if method == "lp":
            penalidades.append(np.abs(D @ I).sum())
        else:
            penalidades.append(np.linalg.norm(I - 1.0 / n_pix))
    desajustes, penalidades = np.array(desajustes), np.array(penalidades)

    if len(lambdas) < 3:
        return float(lambdas[len(lambdas) // 2]), desajustes, penalidades
    x = np.log(np.maximum(desajustes, 1e-300))
    y = np.log(np.maximum(penalidades, 1e-300))
    curvaturas = np.zeros(len(lambdas))
    for i in range(1, len(lambdas) - 1):
        a = np.hypot(x[i] - x[i - 1], y[i] - y[i - 1])
        b = np.hypot(x[i + 1] - x[i], y[i + 1] - y[i])
        c = np.hypot(x[i + 1] - x[i - 1], y[i + 1] - y[i - 1])
        area2 = abs((x[i] - x[i - 1]) * (y[i + 1] - y[i])
                    - (y[i] - y[i - 1]) * (x[i + 1] - x[i]))
        if a * b * c > 0:
            curvaturas[i] = 2.0 * area2 / (a * b * c)
    indice = int(np.argmax(curvaturas)) if curvaturas.any() else len(lambdas) // 2
    canto = float(lambdas[indice])
    logger.info("🔁 Curva L (%s): canto em λ = %.3g.", method, canto)
    return canto, desajustes, penalidades


def diffraction_baseline(grid: IntensityGrid, psf: PSF) -> np.ndarray:
    """
    Imagem limitada por difração: I convoluída com |ψ(x)|²|ψ(y)|².

    O núcleo é amostrado no passo da grade, normalizado para soma 1 e tem
    tamanho ímpar centrado em zero; grades de uma linha usam núcleo 1D.
    """
    h, w = grid.shape
    passo = grid.pixel_pitch
    raio_x = min(int(np.ceil(psf.half_window() / passo)), w)
    x = np.arange(-raio_x, raio_x + 1) * passo
    nucleo = psf.intensity(x)[None, :]
    if h > 1:
        raio_y = min(int(np.ceil(psf.half_window() / passo)), h)
        y = np.arange(-raio_y, raio_y + 1) * passo
        nucleo = psf.intensity(y)[:, None] * nucleo
    nucleo = nucleo / nucleo.sum()
    return fftconvolve(grid.values, nucleo, mode="same")


def reconstruction_error(result: ReconstructionResult, truth: IntensityGrid) -> float:
    """Erro L2 no suporte entre imagens de soma unitária."""
    estimada = result.grid.values
    verdade = np.asarray(truth.values, dtype=float)
    if estimada.shape != verdade.shape:
        raise DomainError(f"❌ Formas diferentes: {estimada.shape} × {verdade.shape}")
    return float(np.linalg.norm(estimada / estimada.sum() - verdade / verdade.sum()))
