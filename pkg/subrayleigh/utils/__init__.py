"""
Pacote `utils`

Utilitários do `subrayleigh`.

Módulos incluídos:
- `loader`: leitura de cenas, PSFs, crosstalk e imagens PGM
- `converter`: conversão de resultados para DataFrame e `split_config`
- `rng`: fluxos aleatórios reprodutíveis e execução paralela ordenada

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .rng import blocos, gerador, mapear_ordenado, numero_trabalhadores
from .loader import (DataLoader, carregar_crosstalk, carregar_pgm, carregar_psf, salvar_pgm)
from .converter import discriminacao_para_df, mc_para_df, momentos_para_df, split_config

__all__ = [
    "blocos", "gerador", "mapear_ordenado", "numero_trabalhadores",
    "DataLoader", "carregar_crosstalk", "carregar_pgm", "carregar_psf", "salvar_pgm",
    "discriminacao_para_df", "mc_para_df", "momentos_para_df", "split_config",
]
