"""
Módulo `spade`

Leis de resultados dos receptores de demultiplexação modal:

- `spade_pmf`: base completa até o corte M, mais o bucket (1D ou 2D);
- `bspade_pmf`: um modo alvo mais o bucket;
- `trispade_pmf`: modos 2D 00, 01 e 10 mais o bucket;
- `interleaved_pmf`: modos (ψ_n ± ψ_{n+1})/√2, cujos termos cruzados dão acesso
  aos momentos ímpares.

Para fontes incoerentes, p[n|θ] = Σ_k w_k |⟨ψ_n|ψ(·−d_k)⟩|², com d_k medido a
partir do eixo do receptor.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Optional

import numpy as np

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.measure.utils import (base_padrao, componentes_relativas, dimensao_cena,
                                       eixo_receptor, registrar_vazamento)
from subrayleigh.models import (PSF, BasisKind, CoherentPairScene, ModeBasis, OutcomePMF,
                                ReceiverKind, Scene, Support)
from subrayleigh.optics import BUCKET, displaced_mode_probabilities, mode_labels

logger = logging.getLogger(__name__)


def _lei_mistura(psf: PSF, basis: ModeBasis, relativas):
    """params -> Σ_k w_k p(·|d_k) sobre os modos da base mais o bucket."""
    def lei(p):
        total = None
        for w, d in relativas(p):
            if w <= 0:
                continue
            termo = w * displaced_mode_probabilities(psf, basis, d)
            total = termo if total is None else total + termo
        return total
    return lei


def _preparar(scene: Scene, psf: PSF, basis: Optional[ModeBasis], alignment_offset: float,
              rotation: float = 0.0, dimensao: Optional[int] = None):
    if isinstance(scene, CoherentPairScene):
        raise UnsupportedError("❌ Use coherent_pair_pmf para pares coerentes.")
    dim = dimensao or dimensao_cena(scene)
    if basis is None:
        basis = base_padrao(psf, dimensionality=dim)
    elif basis.dimensionality != dim:
        basis = ModeBasis(basis.kind, basis.scale, basis.cutoff, dim, basis.interleave_offset)
    eixo = eixo_receptor(scene, alignment_offset)
    base_params, relativas = componentes_relativas(scene, eixo, dim, rotation)
    return basis, base_params, relativas


def spade_pmf(scene: Scene, psf: PSF, basis: Optional[ModeBasis] = None,
              cutoff: Optional[int] = None, alignment_offset: float = 0.0) -> OutcomePMF:
    """
    Lei do SPADE com base completa até o corte.

    Args:
        scene (Scene): Cena incoerente (par, constelação 1D/2D ou grade).
        psf (PSF): PSF normalizada.
        basis (ModeBasis, opcional): Base; padrão HG casada ou adaptada à PSF.
        cutoff (int, opcional): Substitui o corte da base.
        alignment_offset (float): Eixo do receptor menos o centroide verdadeiro.

    Returns:
        OutcomePMF: Resultados "0".."M" (ou "m,n" em 2D) e "bucket". O metadado
        `warnings` aparece quando o vazamento no ponto base excede 1e-3.

    Raises:
        DomainError: Escala da base incompatível com a PSF.
    """
    if basis is not None and cutoff is not None:
        basis = ModeBasis(basis.kind, basis.scale, cutoff, basis.dimensionality,
                          basis.interleave_offset)
    elif cutoff is not None:
        basis = base_padrao(psf, cutoff, dimensao_cena(scene))
    basis, base_params, relativas = _preparar(scene, psf, basis, alignment_offset)
    if basis.kind is BasisKind.PARITY:
        raise DomainError("❌ Base de paridade pertence ao receptor SLIVER.")
    lei = _lei_mistura(psf, basis, relativas)
    metadados = registrar_vazamento(ReceiverKind.SPADE.value, float(lei(base_params)[-1]))
    metadados.update(basis=basis.kind.value, cutoff=basis.cutoff, offset=alignment_offset)
    return OutcomePMF(
        receiver=ReceiverKind.SPADE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=mode_labels(basis) + (BUCKET,),
        metadata=metadados,
    )


def interleaved_pmf(scene: Scene, psf: PSF, basis: Optional[ModeBasis] = None,
                    alignment_offset: float = 0.0) -> OutcomePMF:
    """
    Lei na base intercalada (ψ_n ± ψ_{n+1})/√2, pares a partir de
    `interleave_offset`; modos sem par são medidos isoladamente. Em 2D os pares
    são formados ao longo de x e y é medido na base HG.
    """
    if basis is None:
        basis = ModeBasis(BasisKind.INTERLEAVED, psf.width_param, 20)
    if basis.kind is not BasisKind.INTERLEAVED:
        raise DomainError("❌ interleaved_pmf requer base intercalada.")
    basis, base_params, relativas = _preparar(scene, psf, basis, alignment_offset)
    lei = _lei_mistura(psf, basis, relativas)
    metadados = registrar_vazamento("interleaved", float(lei(base_params)[-1]))
    metadados.update(basis=basis.kind.value, cutoff=basis.cutoff,
                     interleave_offset=basis.interleave_offset)
    return OutcomePMF(
        receiver=ReceiverKind.SPADE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=mode_labels(basis) + (BUCKET,),
        metadata=metadados,
    )


def bspade_pmf(scene: Scene, psf: PSF, basis: Optional[ModeBasis] = None,
               target_mode: int = 1, alignment_offset: float = 0.0) -> OutcomePMF:
    """SPADE binário: contagem no modo alvo e bucket com todo o resto."""
    if target_mode < 0:
        raise DomainError("❌ Modo alvo deve ser não negativo.")
    basis = basis or base_padrao(psf, max(target_mode, 1))
    basis = ModeBasis(basis.kind, basis.scale, target_mode, 1)
    basis, base_params, relativas = _preparar(scene, psf, basis, alignment_offset, dimensao=1)
    completa = _lei_mistura(psf, basis, relativas)

    def lei(p):
        alvo = float(completa(p)[target_mode])
        return np.array([alvo, 1.0 - alvo])

    return OutcomePMF(
        receiver=ReceiverKind.BSPADE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=(str(target_mode), BUCKET),
        metadata={"target_mode": target_mode, "offset": alignment_offset},
    )


TRISPADE_LABELS = ("0,0", "0,1", "1,0")


def trispade_pmf(scene: Scene, psf: PSF, basis: Optional[ModeBasis] = None,
                 rotation: float = 0.0, alignment_offset: float = 0.0) -> OutcomePMF:
    """
    TriSPADE: modos HG 2D 00, 01 e 10 mais o bucket.

    Args:
        rotation (float): Rotação [rad] do referencial do objeto em relação aos
            eixos do separador de modos.
    """
    basis = basis or base_padrao(psf, 1, 2)
    basis = ModeBasis(basis.kind, basis.scale, 1, 2)
    basis, base_params, relativas = _preparar(scene, psf, basis, alignment_offset,
                                              rotation=rotation, dimensao=2)
    completa = _lei_mistura(psf, basis, relativas)
    rotulos = mode_labels(basis)
    indices = [rotulos.index(r) for r in TRISPADE_LABELS]

    def lei(p):
        p_modos = completa(p)[indices]
        return np.append(p_modos, max(1.0 - p_modos.sum(), 0.0))

    return OutcomePMF(
        receiver=ReceiverKind.TRISPADE.value,
        support=Support.DISCRETE,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        labels=TRISPADE_LABELS + (BUCKET,),
        metadata={"rotation": rotation, "offset": alignment_offset},
    )
