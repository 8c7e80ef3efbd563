"""
Módulo `rng`

Fluxos de números aleatórios reprodutíveis. Cada fluxo é um gerador Philox
(baseado em contador) derivado de `SeedSequence([semente, *chaves])`, de modo
que o bloco k de um experimento produz sempre os mesmos números,
independentemente da ordem em que os trabalhadores terminam.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")

TAMANHO_BLOCO = 10_000


def gerador(seed: int, *chaves: int) -> np.random.Generator:
    """
    Gerador independente para o fluxo identificado por (seed, *chaves).

    Args:
        seed (int): Semente mestre (inteiro não negativo de até 64 bits).
        *chaves (int): Índices do fluxo (ponto da grade, bloco, ...).

    Returns:
        np.random.Generator: Gerador Philox.
    """
    semente = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *map(int, chaves)])
    return np.random.Generator(np.random.Philox(semente))


def blocos(total: int, tamanho: int = TAMANHO_BLOCO) -> list[int]:
    """Divide `total` ensaios em blocos de tamanho fixo (o último pode ser menor)."""
    if total <= 0:
        return []
    n_cheios, resto = divmod(total, tamanho)
    return [tamanho] * n_cheios + ([resto] if resto else [])


def numero_trabalhadores() -> int:
    """Número de threads, limitado pela variável de ambiente SUBRAYLEIGH_THREADS."""
    padrao = os.cpu_count() or 1
    valor = os.environ.get("SUBRAYLEIGH_THREADS")
    if not valor:
        return padrao
    try:
        return max(1, int(valor))
    except ValueError:
        logger.warning("⚠️ SUBRAYLEIGH_THREADS inválido (%s); usando %d.", valor, padrao)
        return padrao


def mapear_ordenado(func: Callable[[T], object], itens: Iterable[T]) -> list:
    """
    Aplica `func` a cada item em paralelo e devolve os resultados na ordem
    dos itens (ordem dos índices, não de término).
    """
    itens = list(itens)
    trabalhadores = min(numero_trabalhadores(), max(1, len(itens)))
    if trabalhadores == 1:
        return [func(item) for item in itens]
    with ThreadPoolExecutor(max_workers=trabalhadores) as executor:
        return list(executor.map(func, itens))
