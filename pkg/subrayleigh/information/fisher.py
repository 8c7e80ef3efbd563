"""
Módulo `fisher`

Informação de Fisher clássica por diferenças centrais com extrapolação de
Richardson:

    D(h) = [p(θ+h) − p(θ−h)]/2h,   ∂p ≈ [4D(h/2) − D(h)]/3,
    I_ij = Σ_y ∂_i p(y)·∂_j p(y)/p(y)   (ou ∫ para suporte contínuo).

Leis contínuas são integradas numa malha composta de Gauss–Legendre com
painéis de largura 1/(4Δk) e quebras nas posições das fontes.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Mapping, Optional, Sequence

import numpy as np

from subrayleigh.errors import DomainError, NumericalError
from subrayleigh.models import FisherMatrix, OutcomePMF
from subrayleigh.optics import malha_por_intervalos

logger = logging.getLogger(__name__)

PASSO_RELATIVO = 1e-3
PASSOS_ADIMENSIONAIS = {"b2": 1e-4}
PROB_MINIMA = 1e-300
SINGULAR = "singular-support"
RANK_DEFICIENT = "rank-deficient"
DEGENERATE = "degenerate"


def passo_padrao(pmf: OutcomePMF, nome: str) -> float:
    """h = 1e-3/Δk para parâmetros de comprimento; passo fixo para frações."""
    return PASSOS_ADIMENSIONAIS.get(nome, PASSO_RELATIVO / pmf.delta_k)


def malha_densidade(pmf: OutcomePMF, params: Optional[Mapping[str, float]] = None,
                    nos: int = 16) -> tuple[np.ndarray, np.ndarray]:
    """
    Malha de quadratura (nós, pesos) cobrindo a janela da lei contínua.

    Os painéis têm largura ≤ 1/(4Δk); as posições das fontes entram como quebras.
    """
    a, b = pmf.integration_window(params)
    painel = 0.25 / pmf.delta_k
    quebras = np.linspace(a, b, int(np.ceil((b - a) / painel)) + 1)
    extras = pmf.metadata.get("breakpoints")
    if extras is not None:
        internas = [q for q in extras(pmf.params(params)) if a < q < b]
        quebras = np.union1d(quebras, internas)
    return malha_por_intervalos(quebras, nos=nos)


def _avaliar(pmf: OutcomePMF, params: Mapping[str, float], malha) -> np.ndarray:
    if pmf.is_discrete:
        return pmf.probabilities(params)
    return pmf.density(malha[0], params)


def derivadas_richardson(pmf: OutcomePMF, ponto: Mapping[str, float], nome: str,
                         passo: float, malha=None) -> np.ndarray:
    """Derivada de p (ou da densidade na malha) em relação a `nome`."""
    def diferenca(h):
        mais = dict(ponto, **{nome: ponto[nome] + h})
        menos = dict(ponto, **{nome: ponto[nome] - h})
        return (_avaliar(pmf, mais, malha) - _avaliar(pmf, menos, malha)) / (2.0 * h)
    return (4.0 * diferenca(passo / 2.0) - diferenca(passo)) / 3.0


def _matriz(pmf: OutcomePMF, ponto: Mapping[str, float], nomes: Sequence[str],
            passos: Mapping[str, float]) -> tuple[np.ndarray, set[str]]:
    flags: set[str] = set()
    malha = None if pmf.is_discrete else malha_densidade(pmf, ponto)
    p = _avaliar(pmf, ponto, malha)
    derivadas = np.stack([derivadas_richardson(pmf, ponto, n, passos[n], malha) for n in nomes])
    positivo = p > PROB_MINIMA
    escala = np.max(np.abs(derivadas)) if derivadas.size else 0.0
    if np.any(np.abs(derivadas[:, ~positivo]) > 1e-9 * max(escala, 1e-300)):
        flags.add(SINGULAR)
        logger.warning("⚠️ Resultado com probabilidade nula e derivada não nula em %s.", dict(ponto))
    D = derivadas[:, positivo]
    pesos = 1.0 / p[positivo]
    if malha is not None:
        pesos = pesos * malha[1][positivo]
    matriz = (D * pesos[None, :]) @ D.T
    if not np.all(np.isfinite(matriz)):
        raise NumericalError("❌ Informação de Fisher não finita.",
                             {"params": dict(ponto), "nomes": list(nomes)})
    return matriz, flags


def fisher_scalar(pmf: OutcomePMF, theta0: Optional[float] = None, step: Optional[float] = None,
                  param: str = "theta", params: Optional[Mapping[str, float]] = None,
                  return_flags: bool = False):
    """
    Informação de Fisher por fóton para um único parâmetro.

    Args:
        pmf (OutcomePMF): Lei de resultados.
        theta0 (float, opcional): Valor do parâmetro; padrão o da cena.
        step (float, opcional): Passo h; padrão 1e-3/Δk.
        param (str): Nome do parâmetro.
        params (dict, opcional): Demais parâmetros.
        return_flags (bool): Se verdadeiro, devolve (I, flags).

    Returns:
        float: I(θ) por fóton (por fóton emitido para leis de intensidade).

    Raises:
        DomainError: step não positivo ou parâmetro desconhecido.
        NumericalError: Resultado não finito.
    """
    ponto = pmf.params(params)
    if param not in ponto:
        raise DomainError(f"❌ Parâmetro '{param}' não pertence à lei.")
    if theta0 is not None:
        ponto[param] = float(theta0)
    h = passo_padrao(pmf, param) if step is None else float(step)
    if not h > 0:
        raise DomainError(f"❌ Passo deve ser positivo: {h}")
    matriz, flags = _matriz(pmf, ponto, [param], {param: h})
    valor = float(matriz[0, 0])
    return (valor, frozenset(flags)) if return_flags else valor


def fisher_matrix(pmf: OutcomePMF, param_vector: Optional[Mapping[str, float]] = None,
                  steps: Optional[Mapping[str, float]] = None,
                  names: Optional[Sequence[str]] = None) -> FisherMatrix:
    """
    Matriz de informação de Fisher completa.

    Args:
        pmf (OutcomePMF): Lei de resultados.
        param_vector (dict, opcional): Ponto de avaliação (padrão: parâmetros da cena).
        steps (dict, opcional): Passos por parâmetro.
        names (sequence, opcional): Parâmetros incluídos; padrão todos os de `param_vector`
            ou todos os da lei.

    Returns:
        FisherMatrix: Com flags "singular-support", "rank-deficient" e "degenerate"
        quando aplicável; a inversa usa pseudo-inversa se houver deficiência de posto.
    """
    ponto = pmf.params(param_vector)
    nomes = tuple(names) if names is not None else tuple(
        (param_vector or pmf.base_params).keys())
    passos = {n: passo_padrao(pmf, n) for n in nomes}
    passos.update(steps or {})
    matriz, flags = _matriz(pmf, ponto, nomes, passos)

    escala = float(np.max(np.abs(matriz))) if matriz.size else 0.0
    degenerados = tuple(n for i, n in enumerate(nomes)
                        if np.all(np.abs(matriz[i]) <= 1e-12 * max(escala, 1e-300)))
    if degenerados:
        flags.add(DEGENERATE)
    autovalores = np.linalg.eigvalsh(0.5 * (matriz + matriz.T))
    if escala == 0.0 or autovalores[0] <= 1e-12 * escala:
        flags.add(RANK_DEFICIENT)
    return FisherMatrix(params=nomes, matrix=matriz, per_photon=not pmf.poisson_intensity,
                        flags=frozenset(flags), degenerate_params=degenerados)


def modified_fi_relative(I: float, theta: float) -> float:
    """
    Informação de Fisher modificada Ĩ = θ²·I, cota do erro relativo.

    Raises:
        DomainError: θ = 0 (erro relativo indefinido).
    """
    if theta == 0:
        raise DomainError("❌ Erro relativo indefinido em θ = 0.")
    return float(theta) ** 2 * float(I)


def leading_order_coefficient(theta_dk, values, power: int) -> float:
    """
    Coeficiente de ordem dominante a de values ≈ (θΔk)^power·[a + b(θΔk)²],
    por mínimos quadrados em pequenos θ.
    """
    t = np.asarray(theta_dk, dtype=float)
    y = np.asarray(values, dtype=float) / t ** power
    A = np.column_stack([np.ones_like(t), t * t])
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return float(coef[0])
