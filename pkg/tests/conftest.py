"""
Fixtures compartilhadas pelos testes do `subrayleigh`.

A PSF gaussiana padrão tem σ = 0,5, de modo que Δk = 1 e as separações
podem ser lidas diretamente como θΔk.
"""

import numpy as np
import pytest

from subrayleigh.measure import base_padrao
from subrayleigh.models import TwoPointScene
from subrayleigh.moments import solver_disponivel
from subrayleigh.optics import make_gaussian_psf, make_sinc_psf


@pytest.fixture
def psf():
    """PSF gaussiana com Δk = 1."""
    return make_gaussian_psf(0.5)


@pytest.fixture
def psf_sinc():
    """PSF sinc com Δk = 1."""
    return make_sinc_psf(np.sqrt(3.0))


@pytest.fixture
def base(psf):
    """Base HG casada com corte 20."""
    return base_padrao(psf, 20)


@pytest.fixture
def par():
    """Fábrica de pares igualmente brilhantes centrados na origem."""
    def _par(theta, centroid=0.0, b2=0.5):
        return TwoPointScene(centroid=centroid, separation=theta, brightness_split=b2)
    return _par


def solver_lp_disponivel() -> bool:
    """Verifica se o HiGHS está acessível pelo Pyomo."""
    return solver_disponivel("appsi_highs")
