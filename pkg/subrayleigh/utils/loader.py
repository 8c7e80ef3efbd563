"""
Módulo `loader`

Leitura dos arquivos de entrada: cenas em JSON ("scene v1"), PSFs amostradas
em texto de duas colunas ("# psf v1"), matrizes de crosstalk e imagens de
intensidade em PGM de 8 bits. Também grava grades de intensidade em PGM.

Formato de cena:

    {
      "schema": "scene v1",
      "tipo": "two-point" | "coherent-pair" | "constellation" | "grid",
      ... campos do tipo ...,
      "config": { ... parâmetros padrão da execução ... }
    }

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import json
import logging
from pathlib import Path
from typing import Optional

import numpy as np
from PIL import Image

from subrayleigh.errors import ConfigError, DomainError, SubRayleighError
from subrayleigh.models import (PSF, CoherentPairScene, Constellation, IntensityGrid, Scene,
                                TwoPointScene, validar_estocastica)
from subrayleigh.optics import make_sampled_psf

logger = logging.getLogger(__name__)

ESQUEMA_CENA = "scene v1"
CABECALHO_PSF = "# psf v1"
TIPOS_CENA = ("two-point", "coherent-pair", "constellation", "grid")


def _complexo(valor) -> complex:
    """Aceita número real, [re, im] ou {"re": ..., "im": ...}."""
    if isinstance(valor, dict):
        return complex(float(valor.get("re", 0.0)), float(valor.get("im", 0.0)))
    if isinstance(valor, (list, tuple)):
        if len(valor) != 2:
            raise ConfigError(f"❌ Número complexo deve ter duas partes: {valor}")
        return complex(float(valor[0]), float(valor[1]))
    return complex(valor)


class DataLoader:
    """
    Carrega uma cena a partir de um arquivo JSON estruturado.

    A configuração efetiva é a do bloco "config" do arquivo atualizada pela
    configuração externa (linha de comando), que tem precedência.
    """

    def __init__(self, json_path: str, external_config: Optional[dict] = None):
        """
        Inicializa o carregador.

        Args:
            json_path (str): Caminho do arquivo de cena.
            external_config (dict, opcional): Parâmetros vindos da linha de comando.
        """
        self.path = Path(json_path)
        if not self.path.exists():
            raise FileNotFoundError(f"Scene file not found: {self.path}")
        self.external_config = external_config or {}
        self.config: dict = {}
        self.scene: Optional[Scene] = None

    def load_scene(self) -> Scene:
        """
        Lê o arquivo e constrói a cena.

        Returns:
            Scene: TwoPointScene, CoherentPairScene, Constellation ou IntensityGrid.

        Raises:
            ConfigError: JSON inválido, esquema ausente ou campos faltantes.
        """
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"❌ JSON inválido em {self.path}: {exc}") from exc

        if data.get("schema") != ESQUEMA_CENA:
            raise ConfigError(f"❌ Esquema de cena ausente ou desconhecido em {self.path} "
                              f"(esperado '{ESQUEMA_CENA}').")
        tipo = data.get("tipo")
        if tipo not in TIPOS_CENA:
            raise ConfigError(f"❌ Tipo de cena desconhecido: {tipo}")

        self.config = {**data.get("config", {}), **self.external_config}
        try:
            if tipo == "two-point":
                self.scene = self._carregar_par(data)
            elif tipo == "coherent-pair":
                self.scene = self._carregar_par_coerente(data)
            elif tipo == "constellation":
                self.scene = self._carregar_constelacao(data)
            else:
                self.scene = self._carregar_grade(data)
        except KeyError as exc:
            raise ConfigError(f"❌ Campo obrigatório ausente na cena '{tipo}': {exc}") from exc
        except SubRayleighError:
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"❌ Cena '{tipo}' inválida: {exc}") from exc
        logger.debug("Cena '%s' carregada de %s.", tipo, self.path)
        return self.scene

    @staticmethod
    def _carregar_par(data) -> TwoPointScene:
        return TwoPointScene(centroid=float(data.get("centroid", 0.0)),
                             separation=float(data["separation"]),
                             brightness_split=float(data.get("brightness_split", 0.5)))

    @staticmethod
    def _carregar_par_coerente(data) -> CoherentPairScene:
        return CoherentPairScene(separation=float(data["separation"]),
                                 mean_photons=float(data["mean_photons"]),
                                 gamma=_complexo(data.get("gamma", 0.0)),
                                 centroid=float(data.get("centroid", 0.0)))

    @staticmethod
    def _carregar_constelacao(data) -> Constellation:
        emissores = data["emissores"]
        if not emissores:
            raise ConfigError("❌ Constelação sem emissores.")
        pares = [(e["posicao"], float(e.get("brilho", 1.0))) for e in emissores]
        total = sum(p[1] for p in pares)
        if not total > 0:
            raise DomainError("❌ Brilhos da constelação devem ser positivos.")
        return Constellation.from_emitters([(pos, b / total) for pos, b in pares])

    def _carregar_grade(self, data) -> IntensityGrid:
        passo = float(data.get("pixel_pitch", 1.0))
        if "pgm" in data:
            return carregar_pgm(self.path.parent / data["pgm"], passo)
        return IntensityGrid.normalized(np.asarray(data["values"], dtype=float), passo)


def carregar_psf(caminho: str | Path) -> PSF:
    """
    Lê uma PSF amostrada: cabeçalho "# psf v1" e colunas "x amplitude".

    Raises:
        FileNotFoundError: Arquivo inexistente.
        ConfigError: Cabeçalho ausente ou colunas inválidas.
    """
    caminho = Path(caminho)
    if not caminho.exists():
        raise FileNotFoundError(f"PSF file not found: {caminho}")
    with open(caminho, "r", encoding="utf-8") as f:
        primeira = f.readline().strip()
    if primeira != CABECALHO_PSF:
        raise ConfigError(f"❌ Cabeçalho '{CABECALHO_PSF}' ausente em {caminho}.")
    try:
        dados = np.loadtxt(caminho, comments="#", ndmin=2)
    except ValueError as exc:
        raise ConfigError(f"❌ PSF ilegível em {caminho}: {exc}") from exc
    if dados.shape[1] != 2:
        raise ConfigError(f"❌ A PSF deve ter duas colunas, encontradas {dados.shape[1]}.")
    return make_sampled_psf(dados[:, 0], dados[:, 1])


def carregar_crosstalk(caminho: str | Path) -> np.ndarray:
    """Lê uma matriz de crosstalk estocástica por linhas."""
    caminho = Path(caminho)
    if not caminho.exists():
        raise FileNotFoundError(f"Crosstalk file not found: {caminho}")
    try:
        matriz = np.loadtxt(caminho, comments="#", ndmin=2)
    except ValueError as exc:
        raise ConfigError(f"❌ Matriz de crosstalk ilegível em {caminho}: {exc}") from exc
    return validar_estocastica(matriz, tolerancia=1e-9)


def carregar_pgm(caminho: str | Path, pixel_pitch: float = 1.0) -> IntensityGrid:
    """Lê uma imagem em tons de cinza e a normaliza para soma 1."""
    caminho = Path(caminho)
    if not caminho.exists():
        raise FileNotFoundError(f"PGM file not found: {caminho}")
    with Image.open(caminho) as imagem:
        valores = np.asarray(imagem.convert("L"), dtype=float)
    return IntensityGrid.normalized(valores, pixel_pitch)


def salvar_pgm(grid: IntensityGrid | np.ndarray, caminho: str | Path) -> Path:
    """
    Grava a grade em PGM de 8 bits, com o máximo mapeado em 255.

    Returns:
        Path: Caminho gravado.
    """
    valores = np.asarray(grid.values if isinstance(grid, IntensityGrid) else grid, dtype=float)
    valores = np.atleast_2d(np.clip(valores, 0.0, None))
    maximo = valores.max()
    escala = 255.0 / maximo if maximo > 0 else 0.0
    caminho = Path(caminho)
    caminho.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(np.round(valores * escala).astype(np.uint8)).save(caminho, format="PPM")
    return caminho
