"""
Pacote `handler`

Configuração das execuções e exportação dos resultados com cabeçalho de
proveniência.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .config_handler import (COMANDOS, CONFIG_BASE, RunConfig, extrair_configuracoes,
                             hash_config, parse_grid)
from .result_handler import (formatar_tabela, ler_tabela, montar_cabecalho, salvar_linhas,
                             salvar_tabela)

__all__ = [
    # Configurações
    "COMANDOS", "CONFIG_BASE", "RunConfig", "extrair_configuracoes", "hash_config",
    "parse_grid",

    # Resultados
    "formatar_tabela", "ler_tabela", "montar_cabecalho", "salvar_linhas", "salvar_tabela",
]
