"""
Pacote `optics`

Funções de espalhamento pontual, bases modais e integrais de sobreposição a
partir das quais todos os modelos de medição são construídos.

Módulos incluídos:
- `point_spread`: fábricas de PSF, largura de banda RMS e OTF
- `modes`: modos HG, amplitudes e probabilidades por modo
- `quadrature`: quadraturas adaptativa, Gauss–Legendre e Gauss–Hermite

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .point_spread import (make_gaussian_psf, make_sampled_psf, make_sinc_psf,
                           optical_transfer_function, otf_amostrada, rms_bandwidth)
from .modes import (BUCKET, displaced_mode_probabilities, gram_matrix, hg_mode,
                    mode_amplitudes, mode_labels, overlap_table)
from .quadrature import GaussHermite, integrar, malha_gauss_legendre, malha_por_intervalos

__all__ = [
    "make_gaussian_psf", "make_sampled_psf", "make_sinc_psf", "optical_transfer_function",
    "otf_amostrada", "rms_bandwidth",
    "BUCKET", "displaced_mode_probabilities", "gram_matrix", "hg_mode", "mode_amplitudes",
    "mode_labels", "overlap_table",
    "GaussHermite", "integrar", "malha_gauss_legendre", "malha_por_intervalos",
]
