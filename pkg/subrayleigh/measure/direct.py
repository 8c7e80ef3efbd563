"""
Módulo `direct`

Imagem direta: cada fóton detectado tem posição com densidade
p(x|θ) = Σ_k w_k |ψ(x − d_k)|², mistura das intensidades deslocadas.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import numpy as np
from scipy.integrate import cumulative_trapezoid

from subrayleigh.errors import UnsupportedError
from subrayleigh.measure.utils import dimensao_cena
from subrayleigh.models import PSF, OutcomePMF, PSFKind, ReceiverKind, Scene, Support
from subrayleigh.scene import parametrized_components


def _amostrador_psf(psf: PSF):
    """Função (n, rng) -> n posições com densidade |ψ|² centrada em 0."""
    if psf.kind is PSFKind.GAUSSIAN:
        return lambda n, rng: rng.normal(0.0, psf.width_param, size=n)

    if psf.kind is PSFKind.SINC:
        W = psf.width_param

        def sinc2(n, rng):
            # rejeição com envelope de Cauchy: sinc²(u) ≤ 2/(1+u²), aceitação 1/2
            saida = np.empty(0)
            while len(saida) < n:
                falta = n - len(saida)
                u = rng.standard_cauchy(2 * falta + 16)
                aceita = rng.random(len(u)) * 2.0 / (1.0 + u * u) <= np.sinc(u / np.pi) ** 2
                saida = np.concatenate([saida, u[aceita]])
            return saida[:n] / W
        return sinc2

    x = np.linspace(psf.grid[0], psf.grid[-1], 16 * len(psf.grid))
    cdf = cumulative_trapezoid(psf.intensity(x), x, initial=0.0)
    cdf /= cdf[-1]
    return lambda n, rng: np.interp(rng.random(n), cdf, x)


def direct_pdf(scene: Scene, psf: PSF) -> OutcomePMF:
    """
    Lei contínua da imagem direta.

    Args:
        scene (Scene): Par incoerente, constelação 1D ou grade de uma linha.
        psf (PSF): PSF normalizada.

    Returns:
        OutcomePMF: Suporte contínuo; `law(params)` devolve a densidade x -> p(x).

    Raises:
        UnsupportedError: Cena 2D ou par coerente.
    """
    if dimensao_cena(scene) != 1:
        raise UnsupportedError("❌ Imagem direta modelada apenas em 1D.")
    base_params, comps = parametrized_components(scene)

    def lei(p):
        componentes = comps(p)

        def densidade(x):
            x = np.asarray(x, dtype=float)
            return sum(w * psf.intensity(x - d) for w, d in componentes if w > 0)
        return densidade

    def janela(p):
        desl = [d for w, d in comps(p)]
        hw = psf.half_window()
        return min(desl) - hw, max(desl) + hw

    amostra_psf = _amostrador_psf(psf)

    def amostrador(p, n, rng):
        componentes = comps(p)
        pesos = np.array([w for w, _ in componentes])
        desl = np.array([d for _, d in componentes])
        escolha = rng.choice(len(pesos), size=n, p=pesos / pesos.sum())
        return desl[escolha] + amostra_psf(n, rng)

    return OutcomePMF(
        receiver=ReceiverKind.DIRECT.value,
        support=Support.CONTINUOUS,
        law=lei,
        base_params=base_params,
        delta_k=psf.delta_k,
        window=janela,
        sampler=amostrador,
        metadata={"psf": psf.kind.value, "breakpoints": _pontos_quebra(comps)},
    )


def _pontos_quebra(comps):
    """Função params -> posições das fontes, usadas como pontos de quebra da quadratura."""
    return lambda p: sorted({float(d) for _, d in comps(p)})
