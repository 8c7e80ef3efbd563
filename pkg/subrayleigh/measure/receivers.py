"""
Módulo `receivers`

Despacho (cena, PSF, receptor) -> lei de resultados, respeitando o
desalinhamento e o crosstalk configurados no `Receiver`.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging

from subrayleigh.errors import UnsupportedError
from subrayleigh.measure.coherent import coherent_pair_pmf
from subrayleigh.measure.crosstalk import apply_crosstalk
from subrayleigh.measure.direct import direct_pdf
from subrayleigh.measure.parity import sliver_pmf, splice_pmf
from subrayleigh.measure.spade import bspade_pmf, interleaved_pmf, spade_pmf, trispade_pmf
from subrayleigh.models import (PSF, BasisKind, CoherentPairScene, OutcomePMF, Receiver,
                                ReceiverKind, Scene)

logger = logging.getLogger(__name__)


def build_pmf(scene: Scene, psf: PSF, receiver: Receiver) -> OutcomePMF:
    """
    Constrói a lei de resultados do receptor para a cena.

    Args:
        scene (Scene): Cena.
        psf (PSF): PSF.
        receiver (Receiver): Tipo, base, desalinhamento e crosstalk.

    Returns:
        OutcomePMF: Lei, já com o crosstalk aplicado quando configurado.

    Raises:
        UnsupportedError: Combinação cena/receptor fora do escopo.
    """
    kind = ReceiverKind(receiver.kind)
    offset = receiver.alignment_offset
    if isinstance(scene, CoherentPairScene) and kind is not ReceiverKind.SPADE:
        raise UnsupportedError(f"❌ Par coerente modelado apenas com SPADE, não '{kind.value}'.")

    if kind is ReceiverKind.DIRECT:
        pmf = direct_pdf(scene, psf)
    elif kind is ReceiverKind.SPADE:
        if isinstance(scene, CoherentPairScene):
            pmf = coherent_pair_pmf(scene, psf, receiver.basis, alignment_offset=offset)
        elif receiver.basis is not None and receiver.basis.kind is BasisKind.INTERLEAVED:
            pmf = interleaved_pmf(scene, psf, receiver.basis, alignment_offset=offset)
        else:
            pmf = spade_pmf(scene, psf, receiver.basis, alignment_offset=offset)
    elif kind is ReceiverKind.BSPADE:
        pmf = bspade_pmf(scene, psf, receiver.basis, receiver.target_mode, offset)
    elif kind is ReceiverKind.SLIVER:
        pmf = sliver_pmf(scene, psf, offset)
    elif kind is ReceiverKind.SPLICE:
        pmf = splice_pmf(scene, psf, offset)
    else:
        pmf = trispade_pmf(scene, psf, receiver.basis, receiver.rotation, offset)

    if receiver.crosstalk is not None:
        pmf = apply_crosstalk(pmf, receiver.crosstalk)
    logger.debug("Lei '%s' construída com %d resultados.", pmf.receiver, len(pmf.labels))
    return pmf
