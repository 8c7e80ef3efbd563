"""
Módulo `coherent`

SPADE para um par de fontes parcialmente coerentes. O campo é
α(x) = α₁ψ(x − d₁) + α₂ψ(x − d₂), com E|α₁|² = E|α₂|² = N/2 e
E[α₁α₂*] = γN/2. As contribuições das duas fontes interferem, e a energia
total detectada n(θ)/N = 1 + Re(γ)·C(θ) depende da separação.

A lei devolve intensidades médias por fóton emitido; as contagens são
Poisson independentes com médias N·λ_n.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import numpy as np

from subrayleigh.errors import UnsupportedError
from subrayleigh.measure.utils import base_padrao, registrar_vazamento
from subrayleigh.models import (PSF, BasisKind, CoherentPairScene, ModeBasis, OutcomePMF,
                                ReceiverKind, Support)
from subrayleigh.optics import BUCKET, mode_amplitudes, mode_labels


def coherent_pair_pmf(scene: CoherentPairScene, psf: PSF, basis: ModeBasis | None = None,
                      cutoff: int | None = None, alignment_offset: float = 0.0) -> OutcomePMF:
    """
    Intensidades modais médias de um par com grau de coerência γ.

    Args:
        scene (CoherentPairScene): Fonte 1 em centroid + θ/2, fonte 2 em centroid − θ/2.
        psf (PSF): PSF normalizada.
        basis (ModeBasis, opcional): Base HG (ou adaptada à PSF); padrão casada.
        cutoff (int, opcional): Substitui o corte da base.
        alignment_offset (float): Eixo do receptor menos o centroide.

    Returns:
        OutcomePMF: `poisson_intensity=True`; soma das intensidades = 1 + Re(γ)C(θ).

    Raises:
        DomainError: |γ| > 1 (verificado na construção da cena).
        UnsupportedError: Base sem amplitudes por modo (paridade, intercalada, 2D).
    """
    if not isinstance(scene, CoherentPairScene):
        raise UnsupportedError("❌ coherent_pair_pmf requer CoherentPairScene.")
    basis = basis or base_padrao(psf, cutoff if cutoff is not None else 20)
    if cutoff is not None:
        basis = ModeBasis(basis.kind, basis.scale, cutoff)
    if basis.kind not in (BasisKind.HERMITE_GAUSSIAN, BasisKind.PSF_ADAPTED) \
            or basis.dimensionality != 1:
        raise UnsupportedError("❌ Par coerente exige base 1D com amplitudes por modo.")
    re_gamma = float(np.real(scene.gamma))
    eixo = scene.centroid + alignment_offset

    def lei(p):
        c, t = p["centroid"], p["theta"]
        a1 = mode_amplitudes(psf, basis, c + t / 2.0 - eixo)
        a2 = mode_amplitudes(psf, basis, c - t / 2.0 - eixo)
        modos = 0.5 * (a1 * a1 + a2 * a2 + 2.0 * re_gamma * a1 * a2)
        modos = np.clip(modos, 0.0, None)
        total = 1.0 + re_gamma * float(psf.overlap(t))
        return np.append(modos, max(total - modos.sum(), 0.0))

    base_params = scene.params()
    metadados = registrar_vazamento("coherent", float(lei(base_params)[-1]))
    metadados.update(gamma=complex(scene.gamma), mean_photons=scene.mean_photons,
                     offset=alignment_offset)
    return OutcomePMF(
        receiver=ReceiverKind.SPADE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=mode_labels(basis) + (BUCKET,),
        poisson_intensity=True,
        metadata=metadados,
    )
