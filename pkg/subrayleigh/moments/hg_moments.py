"""
Módulo `hg_moments`

Momentos na base Hermite-Gauss de objetos estendidos.

Com a_m(x) = e^{−(xΔk)²/2}(xΔk)^m/√m! (amplitude de um ponto em x no modo m):

- coerente:    J_mn = ∬ E(x, y)·a_m(x)·a_n(y) dx dy;
- incoerente:  P_mn = Σ I(x, y)·a_m(x)²·a_n(y)²
               = (1/m!n!) Σ I (xΔk)^{2m}(yΔk)^{2n} e^{−Δk²(x²+y²)};
- cruzado ímpar (base intercalada):
               K_k = Σ I·a_k(x)·a_{k+1}(x)·a_0(y)²
                   = Σ I e^{−Δk²(x²+y²)}(xΔk)^{2k+1}/√(k!(k+1)!).

P_mn coincide com a probabilidade do modo HG (m, n) do SPADE na mesma cena e
K_k é metade da diferença entre os resultados "+k,k+1" e "−k,k+1".

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Optional, Sequence, Union

import numpy as np
from scipy.special import gammaln

from subrayleigh.errors import DomainError
from subrayleigh.models import (EVEN_ONLY, INTERLEAVED, DetectionRecord, FieldGrid,
                                IntensityGrid, MomentSet)

logger = logging.getLogger(__name__)


def amplitude_hg(u: np.ndarray, m: int) -> np.ndarray:
    """a_m(u) = e^{−u²/2}·u^m/√m!, com u = xΔk."""
    u = np.asarray(u, dtype=float)
    return np.exp(-0.5 * u * u - 0.5 * gammaln(m + 1.0)) * u ** m


def _checar_ordem(m: int, n: int):
    if m < 0 or n < 0:
        raise DomainError(f"❌ Ordens de momento devem ser não negativas: ({m}, {n})")


def coherent_moment(field: FieldGrid, m: int, n: int, delta_k: float) -> complex:
    """
    J_mn por quadratura de pixel (E·a_m·a_n·pitch²).

    Returns:
        complex: J_mn (real quando o campo é real).
    """
    _checar_ordem(m, n)
    X, Y = field.coordinates()
    E = np.atleast_2d(np.asarray(field.values))
    peso = amplitude_hg(X * delta_k, m) * amplitude_hg(Y * delta_k, n)
    valor = complex(np.sum(E * peso) * field.pixel_pitch ** 2)
    return valor.real if valor.imag == 0 else valor


def incoherent_moment(grid: IntensityGrid, m: int, n: int, delta_k: float) -> float:
    """P_mn exato na grade."""
    _checar_ordem(m, n)
    X, Y = grid.coordinates()
    peso = amplitude_hg(X * delta_k, m) ** 2 * amplitude_hg(Y * delta_k, n) ** 2
    return float(np.sum(grid.values * peso))


def odd_moment(grid: IntensityGrid, k: int, delta_k: float) -> float:
    """K_k exato na grade."""
    _checar_ordem(k, 0)
    X, Y = grid.coordinates()
    peso = (amplitude_hg(X * delta_k, k) * amplitude_hg(X * delta_k, k + 1)
            * amplitude_hg(Y * delta_k, 0) ** 2)
    return float(np.sum(grid.values * peso))


def ordens_ate(max_order: int, dimensionality: int = 2) -> tuple[tuple[int, int], ...]:
    """Pares (m, n) com m + n ≤ max_order (n = 0 em 1D)."""
    if dimensionality == 1:
        return tuple((m, 0) for m in range(max_order + 1))
    return tuple((m, s - m) for s in range(max_order + 1) for m in range(s, -1, -1))


def moment_set_from_grid(grid: IntensityGrid, delta_k: float, max_order: int = 4,
                         odd: bool = False) -> MomentSet:
    """
    Momentos exatos (erro padrão nulo) até a ordem dada.

    Args:
        grid (IntensityGrid): Objeto.
        delta_k (float): Largura de banda RMS.
        max_order (int): Maior m + n.
        odd (bool): Inclui K_k para k + 1 ≤ max_order.
    """
    dim = 1 if grid.shape[0] == 1 else 2
    ordens = ordens_ate(max_order, dim)
    valores = np.array([incoherent_moment(grid, m, n, delta_k) for m, n in ordens])
    impares = tuple(range(max_order)) if odd else ()
    valores_impares = np.array([odd_moment(grid, k, delta_k) for k in impares])
    return MomentSet(orders=ordens, values=valores, stderr=np.zeros_like(valores),
                     delta_k=delta_k, parity=INTERLEAVED if odd else EVEN_ONLY,
                     odd_orders=impares, odd_values=valores_impares,
                     odd_stderr=np.zeros_like(valores_impares))


def _ordem_do_rotulo(rotulo: str) -> Optional[tuple[int, int]]:
    if rotulo[:1] in "+-" or ";" in rotulo:
        return None
    partes = rotulo.split(",")
    try:
        if len(partes) == 1:
            return int(partes[0]), 0
        if len(partes) == 2:
            return int(partes[0]), int(partes[1])
    except ValueError:
        return None
    return None


def _pares_intercalados(record: DetectionRecord) -> dict[int, tuple[int, int]]:
    """k -> (c₊, c₋) a partir dos rótulos "+k,k+1" (1D) ou "+k,k+1;0" (2D)."""
    pares = {}
    for rotulo in record.labels:
        if not rotulo.startswith("+"):
            continue
        base, _, y = rotulo[1:].partition(";")
        if y not in ("", "0"):
            continue
        k = int(base.split(",")[0])
        negativo = "-" + base + (";" + y if y else "")
        pares[k] = (record.count(rotulo), record.count(negativo))
    return pares


def estimate_moments(record: DetectionRecord, delta_k: float,
                     interleaved: Union[DetectionRecord, Sequence[DetectionRecord], None] = None
                     ) -> MomentSet:
    """
    Momentos estimados de contagens SPADE.

    P̂_mn = c_mn/N com erro padrão binomial √(P̂(1−P̂)/N). Registros da base
    intercalada (um por `interleave_offset`) fornecem K̂_k = (c₊ − c₋)/(2N).

    Returns:
        MomentSet: "even-only" quando não há registro intercalado.
    """
    N = record.photons_emitted
    if N <= 0:
        raise DomainError("❌ Registro sem fótons.")
    ordens, valores = [], []
    for rotulo, c in zip(record.labels, record.counts):
        ordem = _ordem_do_rotulo(rotulo)
        if ordem is not None:
            ordens.append(ordem)
            valores.append(c / N)
    valores = np.asarray(valores, dtype=float)
    erros = np.sqrt(valores * (1.0 - valores) / N)

    registros = [] if interleaved is None else (
        [interleaved] if isinstance(interleaved, DetectionRecord) else list(interleaved))
    impares: dict[int, tuple[float, float]] = {}
    for reg in registros:
        Nr = reg.photons_emitted
        for k, (mais, menos) in _pares_intercalados(reg).items():
            pm, pn = mais / Nr, menos / Nr
            impares[k] = ((pm - pn) / 2.0,
                          0.5 * np.sqrt(max(pm + pn - (pm - pn) ** 2, 0.0) / Nr))
    if not registros:
        logger.info("Sem dados intercalados: conjunto de momentos apenas pares.")
    ks = tuple(sorted(impares))
    return MomentSet(orders=tuple(ordens), values=valores, stderr=erros, delta_k=delta_k,
                     parity=INTERLEAVED if ks else EVEN_ONLY, odd_orders=ks,
                     odd_values=np.array([impares[k][0] for k in ks]),
                     odd_stderr=np.array([impares[k][1] for k in ks]), photons=int(N))
