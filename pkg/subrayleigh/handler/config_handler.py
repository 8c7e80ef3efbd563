"""
Módulo `config_handler`

Define, valida e manipula a configuração de uma execução. A configuração
efetiva é a fusão, em ordem crescente de precedência, de `CONFIG_BASE`, do
bloco "config" do arquivo de cena e das opções da linha de comando.

Posições (θ, desalinhamento) são dadas em unidades de 1/Δk, isto é, a grade
"0.01:3:200" varre θΔk.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

# pylint: disable=too-many-instance-attributes

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

import numpy as np

from subrayleigh.errors import ConfigError
from subrayleigh.models import Scene
from subrayleigh.utils.loader import DataLoader

COMANDOS = ("bounds", "mse-sim", "chernoff", "discriminate", "coherence", "moments",
            "reconstruct", "adaptive", "record")
ESTOCASTICOS = {"mse-sim", "discriminate", "moments", "reconstruct", "adaptive", "record"}
RECEPTORES = ("direct", "spade", "bspade", "sliver", "splice", "trispade")
FORMATOS = ("csv", "json-lines")
METODOS_RECONSTRUCAO = ("lp", "nnls")

CONFIG_BASE: dict[str, Any] = {
    "psf": "gaussian",
    "sigma": 1.0,
    "k_halfwidth": 1.0,
    "receiver": "spade",
    "basis_cutoff": 20,
    "offset": 0.0,
    "crosstalk_file": None,
    "gamma": "0",
    "theta": None,
    "grid": None,
    "log": False,
    "N": "1",
    "budget": "fixed",
    "trials": 1000,
    "seed": None,
    "split": 0.5,
    "format": "csv",
    "interleaved": False,
    "support": None,
    "resolution": None,
    "regularization": None,
    "method": "lp",
    "solver_name": "appsi_highs",
    "tee": False,
}

# Chaves que não alteram o conteúdo dos resultados
FORA_DO_HASH = {"out", "verbose", "tee"}


@dataclass(frozen=True)
class RunConfig:
    """
    Configuração validada de uma execução.

    Attributes:
        command (str): Subcomando.
        grid (tuple[float]): Valores de θΔk (ou θ em unidades de 1/Δk).
        photons (tuple[int]): Valores de N.
        gammas (tuple[complex]): Graus de coerência (comando `coherence`).
        seed (int, opcional): Semente; obrigatória para comandos estocásticos.
        options (dict): Configuração efetiva completa, base do hash.
        scene (Scene, opcional): Cena carregada de `--scene`.
        out (str, opcional): Arquivo de saída; None escreve em stdout.
    """

    command: str
    grid: tuple[float, ...]
    photons: tuple[int, ...]
    gammas: tuple[complex, ...]
    seed: Optional[int]
    options: Mapping[str, Any] = field(default_factory=dict)
    scene: Optional[Scene] = field(default=None, compare=False)
    out: Optional[str] = None

    @property
    def format(self) -> str:
        """csv ou json-lines."""
        return str(self.options["format"])

    def get(self, chave: str, padrao: Any = None) -> Any:
        """Valor de uma opção da configuração efetiva."""
        valor = self.options.get(chave)
        return padrao if valor is None else valor

    def config_hash(self) -> str:
        """SHA-256 do JSON canônico da configuração efetiva."""
        return hash_config({k: v for k, v in self.options.items() if k not in FORA_DO_HASH})


def hash_config(config: Mapping[str, Any]) -> str:
    """SHA-256 hexadecimal do JSON canônico (chaves ordenadas, sem espaços)."""
    canonico = json.dumps(config, sort_keys=True, separators=(",", ":"), ensure_ascii=True,
                          default=str)
    return hashlib.sha256(canonico.encode("utf-8")).hexdigest()


def parse_grid(especificacao: str, log: bool = False) -> tuple[float, ...]:
    """
    Interpreta "início:fim:quantidade", com espaçamento logarítmico opcional.

    Raises:
        ConfigError: Formato inválido, quantidade < 1 ou início ≤ 0 em escala log.
    """
    partes = str(especificacao).split(":")
    if len(partes) != 3:
        raise ConfigError(f"❌ Grade deve ter o formato início:fim:quantidade, recebido "
                          f"'{especificacao}'.")
    try:
        inicio, fim, quantidade = float(partes[0]), float(partes[1]), int(partes[2])
    except ValueError as exc:
        raise ConfigError(f"❌ Grade inválida '{especificacao}': {exc}") from exc
    if quantidade < 1:
        raise ConfigError("❌ A grade deve ter ao menos um ponto.")
    if not (np.isfinite(inicio) and np.isfinite(fim)) or inicio < 0 or fim < inicio:
        raise ConfigError(f"❌ Limites da grade inválidos: {inicio}, {fim}")
    if log:
        if inicio <= 0:
            raise ConfigError("❌ Grade logarítmica exige início positivo.")
        valores = np.geomspace(inicio, fim, quantidade)
    else:
        valores = np.linspace(inicio, fim, quantidade)
    return tuple(float(v) for v in valores)


def _lista(texto: Any, conversor, nome: str) -> tuple:
    """Lista separada por vírgulas (ou valor único)."""
    if isinstance(texto, (list, tuple)):
        itens = list(texto)
    else:
        itens = [t for t in str(texto).split(",") if t.strip()]
    try:
        return tuple(conversor(str(t).strip()) for t in itens)
    except ValueError as exc:
        raise ConfigError(f"❌ Valor inválido em --{nome}: {texto}") from exc


def _inteiro_positivo(texto: str) -> int:
    valor = float(texto)
    if not valor.is_integer():
        raise ValueError(texto)
    return int(valor)


def _regularizacao(valor: Any) -> Any:
    """λ da reconstrução: None (padrão da variante), "auto" (curva L) ou real ≥ 0."""
    if valor is None or valor == "auto":
        return valor
    try:
        lam = float(valor)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"❌ --regularization deve ser um real ou 'auto': {valor}") from exc
    if not lam >= 0:
        raise ConfigError(f"❌ --regularization deve ser não negativo: {valor}")
    return lam


def extrair_configuracoes(args: Any, config_base: Optional[Mapping[str, Any]] = None
                          ) -> RunConfig:
    """
    Constrói a `RunConfig` a partir dos argumentos da linha de comando.

    Args:
        args (argparse.Namespace | dict): Opções; valores None não sobrescrevem.
        config_base (dict, opcional): Padrões (padrão: `CONFIG_BASE`).

    Returns:
        RunConfig: Configuração validada.

    Raises:
        ConfigError: Comando, receptor, formato, grade, N ou semente inválidos.
        FileNotFoundError: Arquivo de cena inexistente.
    """
    brutos = dict(vars(args)) if not isinstance(args, Mapping) else dict(args)
    comando = brutos.pop("command", None)
    if comando not in COMANDOS:
        raise ConfigError(f"❌ Comando desconhecido: {comando}")
    externos = {k.replace("-", "_"): v for k, v in brutos.items() if v is not None}

    cena = None
    config = dict(config_base or CONFIG_BASE)
    if externos.get("scene"):
        loader = DataLoader(externos["scene"], externos)
        cena = loader.load_scene()
        config.update(loader.config)
    else:
        config.update(externos)

    if config["receiver"] not in RECEPTORES:
        raise ConfigError(f"❌ Receptor desconhecido: {config['receiver']}")
    if config["format"] not in FORMATOS:
        raise ConfigError(f"❌ Formato desconhecido: {config['format']}")
    if config["budget"] not in ("fixed", "poisson"):
        raise ConfigError(f"❌ Orçamento desconhecido: {config['budget']}")

    if config.get("grid") is not None:
        grade = parse_grid(config["grid"], bool(config.get("log")))
    elif config.get("theta") is not None:
        grade = _lista(config["theta"], float, "theta")
    else:
        grade = ()
    if comando not in ("moments", "reconstruct", "record") and not grade:
        raise ConfigError("❌ Grade de θ vazia; use --grid ou --theta.")
    if any(not np.isfinite(t) or t < 0 for t in grade):
        raise ConfigError(f"❌ Valores de θ devem ser finitos e não negativos: {grade}")

    fotons = _lista(config["N"], _inteiro_positivo, "N")
    if not fotons or min(fotons) <= 0:
        raise ConfigError(f"❌ N deve conter inteiros positivos: {config['N']}")
    gammas = _lista(config["gamma"], complex, "gamma")
    if any(abs(g) > 1.0 + 1e-12 for g in gammas):
        raise ConfigError(f"❌ |γ| deve ser ≤ 1: {config['gamma']}")

    seed = config.get("seed")
    if comando in ESTOCASTICOS and seed is None:
        raise ConfigError(f"❌ O comando '{comando}' é estocástico e exige --seed.")
    if seed is not None and (int(seed) != seed or seed < 0):
        raise ConfigError(f"❌ Semente deve ser um inteiro não negativo: {seed}")
    if int(config["trials"]) <= 0:
        raise ConfigError("❌ --trials deve ser positivo.")
    if not 0.0 < float(config["split"]) < 1.0:
        raise ConfigError(f"❌ --split deve estar em (0, 1): {config['split']}")
    if int(config["basis_cutoff"]) < 1:
        raise ConfigError("❌ --basis-cutoff deve ser ao menos 1.")
    if config["method"] not in METODOS_RECONSTRUCAO:
        raise ConfigError(f"❌ Variante de reconstrução desconhecida: {config['method']}")
    config["regularization"] = _regularizacao(config.get("regularization"))

    config["command"] = comando
    return RunConfig(command=comando, grid=grade, photons=fotons, gammas=gammas,
                     seed=None if seed is None else int(seed), options=config, scene=cena,
                     out=config.get("out"))

