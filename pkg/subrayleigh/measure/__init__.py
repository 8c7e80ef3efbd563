"""
Pacote `measure`

Converte (cena, PSF, receptor) em leis de resultados e amostra registros de
detecção a partir delas.

Módulos incluídos:
- `direct`: imagem direta (densidade contínua de posição)
- `spade`: SPADE completo, binário, TriSPADE e base intercalada
- `parity`: SLIVER e SPLICE
- `coherent`: par parcialmente coerente (intensidades Poisson)
- `crosstalk`: crosstalk modal e restrição de resultados
- `sampling`: amostragem e serialização de registros
- `receivers`: despacho por tipo de receptor

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .direct import direct_pdf
from .spade import TRISPADE_LABELS, bspade_pmf, interleaved_pmf, spade_pmf, trispade_pmf
from .parity import DISCARD, sliver_pmf, splice_click_probability, splice_pmf
from .coherent import coherent_pair_pmf
from .crosstalk import apply_crosstalk, restrict_outcomes
from .sampling import record_from_json, record_to_json, sample_counts, sample_record
from .receivers import build_pmf
from .utils import base_padrao

__all__ = [
    "direct_pdf",
    "TRISPADE_LABELS", "bspade_pmf", "interleaved_pmf", "spade_pmf", "trispade_pmf",
    "DISCARD", "sliver_pmf", "splice_click_probability", "splice_pmf",
    "coherent_pair_pmf",
    "apply_crosstalk", "restrict_outcomes",
    "record_from_json", "record_to_json", "sample_counts", "sample_record",
    "build_pmf", "base_padrao",
]
