"""
Módulo `parity`

Receptores baseados em paridade em torno do eixo óptico:

- SLIVER: separa o campo em partes simétrica e antissimétrica;
  p[ímpar|d] = [1 − C(2d)]/2, com C a autocorrelação da PSF.
- SPLICE: projeta no modo antissimétrico sgn(x)·ψ(x) e descarta o
  complemento ortogonal. Para a PSF gaussiana,
  q(d) = e^{−Q}·erf²(dΔk/√2), Q = (dΔk)².

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import numpy as np
from scipy.special import erf

from subrayleigh.errors import UnsupportedError
from subrayleigh.measure.utils import componentes_relativas, dimensao_cena, eixo_receptor
from subrayleigh.models import (PSF, BasisKind, ModeBasis, OutcomePMF, PSFKind, ReceiverKind,
                                Scene, Support)
from subrayleigh.optics import displaced_mode_probabilities

DISCARD = "discard"


def sliver_pmf(scene: Scene, psf: PSF, alignment_offset: float = 0.0) -> OutcomePMF:
    """
    Lei do SLIVER sobre {even, odd}; o centro de inversão é o eixo do receptor.

    Returns:
        OutcomePMF: p[odd] = Σ_k w_k·[1 − C(2d_k)]/2 e p[even] = 1 − p[odd].
    """
    if dimensao_cena(scene) != 1:
        raise UnsupportedError("❌ SLIVER modelado apenas em 1D.")
    base = ModeBasis(BasisKind.PARITY, psf.width_param, 1)
    base_params, relativas = componentes_relativas(scene, eixo_receptor(scene, alignment_offset), 1)

    def lei(p):
        total = np.zeros(2)
        for w, d in relativas(p):
            total += w * displaced_mode_probabilities(psf, base, d)[:2]
        return total

    return OutcomePMF(
        receiver=ReceiverKind.SLIVER.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=("even", "odd"),
        metadata={"offset": alignment_offset},
    )


def splice_click_probability(psf: PSF, d) -> np.ndarray:
    """Probabilidade de clique do modo sgn(x)ψ(x) para uma fonte em d (PSF gaussiana)."""
    u = np.asarray(d, dtype=float) * psf.delta_k
    return np.exp(-u * u) * erf(u / np.sqrt(2.0)) ** 2


def splice_pmf(scene: Scene, psf: PSF, alignment_offset: float = 0.0) -> OutcomePMF:
    """
    Lei do SPLICE: um único resultado retido ("click") e o canal de descarte.

    Raises:
        UnsupportedError: PSF não gaussiana.
    """
    if psf.kind is not PSFKind.GAUSSIAN:
        raise UnsupportedError("❌ O modo de projeção do SPLICE é definido só para PSF gaussiana.")
    if dimensao_cena(scene) != 1:
        raise UnsupportedError("❌ SPLICE modelado apenas em 1D.")
    base_params, relativas = componentes_relativas(scene, eixo_receptor(scene, alignment_offset), 1)

    def lei(p):
        q = float(sum(w * splice_click_probability(psf, d) for w, d in relativas(p)))
        return np.array([q, 1.0 - q])

    return OutcomePMF(
        receiver=ReceiverKind.SPLICE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=("click", DISCARD),
        discard_labels=(DISCARD,),
        metadata={"offset": alignment_offset, "projection": "sgn(x)psi(x)"},
    )
