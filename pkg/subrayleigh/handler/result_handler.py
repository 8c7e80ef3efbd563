"""
Módulo `result_handler`

Exporta as tabelas de resultados em CSV ou JSON-lines, sempre precedidas por
linhas de comentário "#" com a versão da ferramenta, o hash da configuração e
a semente. Valores infinitos (por exemplo a CRB da imagem direta em θ = 0) são
escritos como o texto sentinela "inf".

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import io
import logging
import sys
from pathlib import Path
from typing import Iterable, Mapping, Optional

import numpy as np
import pandas as pd

from subrayleigh.errors import ConfigError, NumericalError

logger = logging.getLogger(__name__)

FORMATO_FLOAT = "%.8e"
SENTINELA_INF = "inf"


def montar_cabecalho(versao: str, config_hash: str, seed: Optional[int],
                     extras: Optional[Mapping[str, object]] = None) -> list[str]:
    """Linhas de cabeçalho (sem o prefixo "#")."""
    linhas = [f"subrayleigh {versao}", f"config_hash {config_hash}",
              f"seed {'none' if seed is None else seed}"]
    linhas += [f"{k} {v}" for k, v in (extras or {}).items()]
    return linhas


def _verificar_finitos(df: pd.DataFrame, permitidas: Iterable[str]):
    """Valores não finitos só são aceitos nas colunas sinalizadas."""
    permitidas = set(permitidas)
    for coluna in df.select_dtypes(include=[np.number]).columns:
        if coluna in permitidas:
            continue
        if not np.all(np.isfinite(df[coluna].to_numpy(dtype=float))):
            raise NumericalError(f"❌ Coluna '{coluna}' contém valores não finitos.",
                                 {"coluna": coluna})


def _com_sentinela(df: pd.DataFrame) -> pd.DataFrame:
    saida = df.copy()
    for coluna in saida.select_dtypes(include=[np.floating]).columns:
        valores = saida[coluna].to_numpy(dtype=float)
        if np.any(np.isinf(valores)):
            saida[coluna] = [SENTINELA_INF if v == np.inf else
                             f"-{SENTINELA_INF}" if v == -np.inf else v for v in valores]
    return saida


def formatar_tabela(df: pd.DataFrame, cabecalho: Iterable[str], formato: str = "csv",
                    colunas_inf: Iterable[str] = ()) -> str:
    """
    Serializa a tabela com cabeçalho de comentários.

    Args:
        df (pd.DataFrame): Resultados.
        cabecalho (Iterable[str]): Linhas de proveniência.
        formato (str): "csv" ou "json-lines".
        colunas_inf (Iterable[str]): Colunas em que inf (ou nan) é um valor legítimo.

    Returns:
        str: Conteúdo completo do arquivo.

    Raises:
        ConfigError: Formato desconhecido.
        NumericalError: Valor não finito fora das colunas permitidas.
    """
    _verificar_finitos(df, colunas_inf)
    buffer = io.StringIO()
    for linha in cabecalho:
        buffer.write(f"# {linha}\n")
    if formato == "csv":
        df.to_csv(buffer, index=False, float_format=FORMATO_FLOAT, na_rep="nan",
                  lineterminator="\n")
    elif formato == "json-lines":
        if not df.empty:
            texto = _com_sentinela(df).to_json(orient="records", lines=True,
                                               double_precision=15)
            buffer.write(texto if texto.endswith("\n") else texto + "\n")
    else:
        raise ConfigError(f"❌ Formato desconhecido: {formato}")
    return buffer.getvalue()


def salvar_tabela(df: pd.DataFrame, caminho: Optional[str | Path], cabecalho: Iterable[str],
                  formato: str = "csv", colunas_inf: Iterable[str] = ()) -> Optional[Path]:
    """
    Grava a tabela em arquivo (ou em stdout quando `caminho` é None).

    Returns:
        Path | None: Caminho gravado.
    """
    conteudo = formatar_tabela(df, cabecalho, formato, colunas_inf)
    if caminho is None:
        sys.stdout.write(conteudo)
        return None
    caminho = Path(caminho)
    caminho.parent.mkdir(parents=True, exist_ok=True)
    with open(caminho, "w", encoding="utf-8", newline="\n") as f:
        f.write(conteudo)
    logger.info("✅ %d linhas salvas em '%s'.", len(df), caminho)
    return caminho


def salvar_linhas(linhas: Iterable[str], caminho: Optional[str | Path],
                  cabecalho: Iterable[str]) -> Optional[Path]:
    """Grava linhas já serializadas (por exemplo registros JSON) após o cabeçalho."""
    conteudo = "".join(f"# {c}\n" for c in cabecalho) + "".join(f"{l}\n" for l in linhas)
    if caminho is None:
        sys.stdout.write(conteudo)
        return None
    caminho = Path(caminho)
    caminho.parent.mkdir(parents=True, exist_ok=True)
    with open(caminho, "w", encoding="utf-8", newline="\n") as f:
        f.write(conteudo)
    logger.info("✅ Registros salvos em '%s'.", caminho)
    return caminho


def ler_tabela(caminho: str | Path) -> pd.DataFrame:
    """Lê uma tabela CSV gravada por `salvar_tabela`, ignorando o cabeçalho."""
    return pd.read_csv(caminho, comment="#")
