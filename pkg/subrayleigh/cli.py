"""
Módulo `cli`

Interface de linha de comando do `subrayleigh`. Cada invocação executa um
único subcomando e grava um arquivo de dados (CSV ou JSON-lines) com
cabeçalho de proveniência.

Códigos de saída: 0 sucesso, 2 erro de configuração, 3 falha numérica. Em
caso de erro uma linha JSON {"erro", "tipo", "diagnostico"} vai para stderr.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from subrayleigh import __version__
from subrayleigh.errors import ConfigError, DomainError, NumericalError, UnsupportedError
from subrayleigh.experiments import (simular_adaptativo, simular_bounds, simular_chernoff,
                                     simular_coerencia, simular_discriminacao, simular_momentos,
                                     simular_mse, simular_reconstrucao, simular_registros)
from subrayleigh.handler import (COMANDOS, RunConfig, extrair_configuracoes, montar_cabecalho,
                                 salvar_linhas, salvar_tabela)
from subrayleigh.utils import salvar_pgm

logger = logging.getLogger(__name__)

SAIDA_OK = 0
SAIDA_CONFIG = 2
SAIDA_NUMERICA = 3

DRIVERS = {
    "bounds": simular_bounds,
    "mse-sim": simular_mse,
    "chernoff": simular_chernoff,
    "discriminate": simular_discriminacao,
    "coherence": simular_coerencia,
    "moments": simular_momentos,
    "reconstruct": simular_reconstrucao,
    "adaptive": simular_adaptativo,
}

# Colunas em que valores não finitos são legítimos (sinalizados)
COLUNAS_NAO_FINITAS = {
    "bounds": ("N_crb_direct", "N_crb_spade", "N_crb_bspade", "N_crb_sliver", "N_crb_splice",
               "N_crb_trispade", "N_qcrb"),
    "mse-sim": ("N_crb", "N_crb_bias_corrected"),
    "chernoff": ("xi_direct", "xi_spade", "xi_sliver", "xi_splice", "xi_quantum"),
    "discriminate": ("exponent_stderr", "chernoff_exponent"),
    "moments": ("z",),
    "adaptive": ("modified_fi_static",),
}


def configurar_logging(verbose: int = 0):
    """Logs em stderr; os arquivos de dados nunca recebem texto de log."""
    nivel = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=nivel, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s", force=True)


def criar_parser() -> argparse.ArgumentParser:
    """Parser com as opções comuns repetidas em cada subcomando."""
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument("--scene", help="Arquivo de cena JSON (schema 'scene v1').")
    comum.add_argument("--psf", help="gaussian, sinc ou arquivo '# psf v1'.")
    comum.add_argument("--sigma", type=float, help="σ da PSF gaussiana.")
    comum.add_argument("--k-halfwidth", dest="k_halfwidth", type=float,
                       help="Meia-largura W da PSF sinc.")
    comum.add_argument("--receiver", help="direct, spade, bspade, sliver, splice ou trispade.")
    comum.add_argument("--basis-cutoff", dest="basis_cutoff", type=int,
                       help="Maior índice de modo da base.")
    comum.add_argument("--offset", type=float,
                       help="Desalinhamento do receptor (ou centroide em adaptive), em 1/Δk.")
    comum.add_argument("--crosstalk-file", dest="crosstalk_file",
                       help="Matriz de crosstalk (texto).")
    comum.add_argument("--gamma", help="Grau(s) de coerência, separados por vírgula.")
    grade = comum.add_mutually_exclusive_group()
    grade.add_argument("--theta", help="θΔk (valor único ou lista separada por vírgulas).")
    grade.add_argument("--grid", help="Grade de θΔk 'início:fim:quantidade'.")
    comum.add_argument("--log", action="store_true", default=None,
                       help="Espaçamento logarítmico da grade.")
    comum.add_argument("--N", dest="N", help="Fótons por experimento (lista permitida).")
    comum.add_argument("--budget", choices=("fixed", "poisson"), help="Convenção de orçamento.")
    comum.add_argument("--trials", type=int, help="Ensaios de Monte Carlo.")
    comum.add_argument("--seed", type=int, help="Semente mestre.")
    comum.add_argument("--split", type=float, help="Fração de fótons da etapa 1 (adaptive).")
    comum.add_argument("--interleaved", action="store_true", default=None,
                       help="Mede também a base intercalada (momentos ímpares).")
    comum.add_argument("--support", type=float, help="Meia-largura do suporte, em 1/Δk.")
    comum.add_argument("--resolution", type=int, help="Pixels da reconstrução ao longo de x.")
    comum.add_argument("--regularization",
                       help="λ da reconstrução (real ≥ 0 ou 'auto' para a curva L).")
    comum.add_argument("--method", choices=("nnls", "lp"), help="Variante da reconstrução.")
    comum.add_argument("--out", help="Arquivo de saída (padrão: stdout).")
    comum.add_argument("--format", choices=("csv", "json-lines"), help="Formato de saída.")
    comum.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="subrayleigh",
                                     description="Limites de resolução sub-Rayleigh.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for comando in COMANDOS:
        sub.add_parser(comando, parents=[comum])
    return parser


def _cabecalho(config: RunConfig, extras: dict) -> list[str]:
    visiveis = {k: v for k, v in extras.items() if isinstance(v, (str, int, float, bool))}
    return montar_cabecalho(__version__, config.config_hash(), config.seed,
                            {"command": config.command, **visiveis})


def run(config: RunConfig) -> int:
    """
    Executa o subcomando e grava a saída.

    Returns:
        int: Código de saída (0 em caso de sucesso).
    """
    if config.command == "record":
        linhas, extras = simular_registros(config)
        salvar_linhas(linhas, config.out, _cabecalho(config, extras))
        return SAIDA_OK

    tabela, extras = DRIVERS[config.command](config)
    salvar_tabela(tabela, config.out, _cabecalho(config, extras), config.format,
                  COLUNAS_NAO_FINITAS.get(config.command, ()))
    resultado = extras.get("resultado")
    if resultado is not None and config.out is not None:
        salvar_pgm(resultado.grid, Path(config.out).with_suffix(".pgm"))
    return SAIDA_OK


def _registrar_erro(exc: Exception, diagnostico: Optional[dict] = None):
    registro = {"erro": str(exc), "tipo": type(exc).__name__, "diagnostico": diagnostico or {}}
    sys.stderr.write(json.dumps(registro, ensure_ascii=False, default=str) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada do script `subrayleigh`."""
    args = criar_parser().parse_args(argv)
    configurar_logging(args.verbose)
    try:
        config = extrair_configuracoes(args)
        return run(config)
    except (ConfigError, DomainError, UnsupportedError, FileNotFoundError) as exc:
        _registrar_erro(exc)
        return SAIDA_CONFIG
    except NumericalError as exc:
        _registrar_erro(exc, exc.diagnostics)
        return SAIDA_NUMERICA


if __name__ == "__main__":
    sys.exit(main())
