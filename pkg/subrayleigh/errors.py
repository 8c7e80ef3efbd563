"""
Módulo `errors`

Hierarquia de exceções do pacote `subrayleigh`. Cada classe herda também da
exceção padrão correspondente (`ValueError`, `RuntimeError`, ...) para que
chamadores genéricos continuem capturando os erros da forma usual.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

from typing import Any, Optional


class SubRayleighError(Exception):
    """Erro base do pacote."""


class DomainError(SubRayleighError, ValueError):
    """Parâmetro físico fora do domínio permitido."""


class ConfigError(SubRayleighError, ValueError):
    """Configuração de execução ou arquivo de entrada inválido."""


class UnsupportedError(SubRayleighError, NotImplementedError):
    """Combinação de modelos fora do escopo implementado."""


class NumericalError(SubRayleighError, RuntimeError):
    """
    Falha numérica (quadratura sem convergência, cancelamento catastrófico,
    resultado não finito).

    Attributes:
        diagnostics (dict): Informações para depuração (erro estimado, passo, etc.).
    """

    def __init__(self, message: str, diagnostics: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})
