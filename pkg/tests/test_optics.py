"""
Testes do pacote `optics`: PSFs, largura de banda RMS, modos HG e leis de
deslocamento.
"""

import gc
import weakref

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.stats import poisson

from subrayleigh.errors import DomainError
from subrayleigh.models import BasisKind, ModeBasis
from subrayleigh.optics import (displaced_mode_probabilities, gram_matrix, hg_mode,
                                make_gaussian_psf, make_sampled_psf, make_sinc_psf,
                                malha_gauss_legendre, mode_amplitudes, optical_transfer_function,
                                otf_amostrada, overlap_table, rms_bandwidth)
from subrayleigh.optics.modes import _CACHE_QR


def test_gaussiana_delta_k_e_normalizacao():
    psf = make_gaussian_psf(0.5)
    assert psf.delta_k == 1.0
    assert psf.sigma == 0.5
    norma = quad(lambda x: float(make_gaussian_psf(1.0).intensity(x)), -15, 15,
                 epsabs=1e-13)[0]
    assert norma == pytest.approx(1.0, abs=1e-9)
    assert rms_bandwidth(psf) == pytest.approx(1.0, rel=1e-6)
    assert rms_bandwidth(make_gaussian_psf(1.0)) == pytest.approx(0.5, rel=1e-6)


@pytest.mark.parametrize("sigma", [0.0, -1.0, np.inf])
def test_gaussiana_sigma_invalido(sigma):
    with pytest.raises(DomainError):
        make_gaussian_psf(sigma)


def test_sinc_valores():
    W = np.sqrt(3.0)
    psf = make_sinc_psf(W)
    assert psf.delta_k == pytest.approx(1.0, abs=1e-12)
    assert float(psf.amplitude(0.0)) == pytest.approx(np.sqrt(W / np.pi))
    assert rms_bandwidth(psf) == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(DomainError):
        make_sinc_psf(0.0)


def test_sinc_normalizacao_pelo_espectro():
    W = np.sqrt(3.0)
    psf = make_sinc_psf(W)
    assert float(optical_transfer_function(psf, 0.0)) == pytest.approx(1.0)
    assert float(psf.overlap(0.0)) == pytest.approx(1.0)


def test_rms_bandwidth_escala_com_dilatacao():
    assert rms_bandwidth(make_gaussian_psf(2.0)) == pytest.approx(
        rms_bandwidth(make_gaussian_psf(1.0)) / 2.0, rel=1e-6)


def test_psf_amostrada_reproduz_gaussiana():
    gauss = make_gaussian_psf(0.5)
    x = np.linspace(-6.0, 6.0, 1201)
    psf = make_sampled_psf(x, 3.0 * gauss.amplitude(x))
    assert psf.delta_k == pytest.approx(1.0, rel=1e-5)
    assert float(psf.amplitude(0.3)) == pytest.approx(float(gauss.amplitude(0.3)), abs=1e-7)


def test_psf_amostrada_grade_invalida():
    with pytest.raises(DomainError):
        make_sampled_psf([0.0, 1.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0], np.ones(8))
    with pytest.raises(DomainError):
        make_sampled_psf(np.linspace(0, 1, 4), np.ones(4))


def test_hg_modo_fundamental_e_derivada():
    psf = make_gaussian_psf(0.5)
    assert float(hg_mode(0, 0.5, 0.0)) == pytest.approx((2 * np.pi * 0.25) ** -0.25)
    x = np.linspace(-3, 3, 61)
    np.testing.assert_allclose(hg_mode(0, 0.5, x), psf.amplitude(x), atol=1e-12)
    h = 1e-5
    derivada = (psf.amplitude(x + h) - psf.amplitude(x - h)) / (2 * h)
    np.testing.assert_allclose(hg_mode(1, 0.5, x), -derivada / psf.delta_k, atol=1e-8)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
def test_hg_trocas_de_sinal(n):
    x = np.linspace(-8, 8, 20001)
    valores = hg_mode(n, 0.5, x)
    sinais = np.sign(valores[np.abs(valores) > 1e-12])
    assert int(np.sum(sinais[1:] != sinais[:-1])) == n


def test_gram_hg_identidade():
    base = ModeBasis(BasisKind.HERMITE_GAUSSIAN, 0.5, 20)
    assert np.max(np.abs(gram_matrix(base) - np.eye(21))) <= 1e-9
    intercalada = ModeBasis(BasisKind.INTERLEAVED, 0.5, 7, interleave_offset=1)
    assert np.max(np.abs(gram_matrix(intercalada) - np.eye(8))) <= 1e-9


def test_gram_base_adaptada_sinc():
    psf = make_sinc_psf(2.0)
    base = ModeBasis(BasisKind.PSF_ADAPTED, 2.0, 10)
    assert np.max(np.abs(gram_matrix(base, psf) - np.eye(11))) <= 1e-9


def test_probabilidades_deslocadas_identidade(psf, base):
    p = displaced_mode_probabilities(psf, base, 0.0)
    assert p[0] == 1.0
    assert np.all(p[1:] == 0.0)


def test_probabilidades_deslocadas_poisson(psf, base):
    p = displaced_mode_probabilities(psf, base, 0.1)
    assert p[1] == pytest.approx(np.exp(-0.01) * 0.01, rel=1e-10)
    assert p[1] == pytest.approx(9.900e-3, abs=1e-6)
    assert p.sum() == pytest.approx(1.0, abs=1e-12)
    for d in (-5.0, -1.3, 0.4, 2.0, 5.0):
        np.testing.assert_allclose(displaced_mode_probabilities(psf, base, d)[:-1],
                                   poisson.pmf(np.arange(21), d * d), atol=1e-8)


def test_poisson_confere_com_quadratura():
    gauss = make_gaussian_psf(0.5)
    x = np.linspace(-6.0, 6.0, 2401)
    amostrada = make_sampled_psf(x, gauss.amplitude(x))
    base = ModeBasis(BasisKind.HERMITE_GAUSSIAN, 0.5, 3)
    a = mode_amplitudes(amostrada, base, 0.1)
    np.testing.assert_allclose(a ** 2, poisson.pmf(np.arange(4), 0.01), atol=1e-7)


def test_base_qr_nao_retem_a_psf():
    x = np.linspace(-6.0, 6.0, 2401)
    amostrada = make_sampled_psf(x, make_gaussian_psf(0.5).amplitude(x))
    base = ModeBasis(BasisKind.PSF_ADAPTED, amostrada.width_param, 3)
    primeira = mode_amplitudes(amostrada, base, 0.2)
    assert id(amostrada) in _CACHE_QR
    np.testing.assert_array_equal(mode_amplitudes(amostrada, base, 0.2), primeira)

    chave, referencia = id(amostrada), weakref.ref(amostrada)
    del amostrada
    gc.collect()
    assert referencia() is None
    assert chave not in _CACHE_QR


def test_escala_incompativel(psf):
    with pytest.raises(DomainError):
        displaced_mode_probabilities(psf, ModeBasis(BasisKind.HERMITE_GAUSSIAN, 0.7, 5), 0.1)


def test_amplitudes_sinc_legendre(psf_sinc):
    base = ModeBasis(BasisKind.PSF_ADAPTED, psf_sinc.width_param, 15)
    a0 = mode_amplitudes(psf_sinc, base, 0.0)
    np.testing.assert_allclose(a0, np.eye(16)[0], atol=1e-12)
    a = mode_amplitudes(psf_sinc, base, 0.3)
    assert a[0] == pytest.approx(float(psf_sinc.overlap(0.3)), abs=1e-12)
    assert np.sum(a ** 2) == pytest.approx(1.0, abs=1e-9)


def test_tabela_de_sobreposicao(psf):
    base = ModeBasis(BasisKind.HERMITE_GAUSSIAN, 0.5, 4)
    tabela = overlap_table(psf, base, [0.0, 0.5, 3.0])
    assert tabela.amplitudes.shape == (5, 3)
    np.testing.assert_allclose(tabela.amplitudes[:, 0], np.eye(5)[0], atol=1e-9)
    assert np.all((tabela.leakage >= 0) & (tabela.leakage <= 1))
    np.testing.assert_allclose(tabela.probabilities().sum(axis=0) + tabela.leakage, 1.0,
                               atol=1e-12)


def test_otf_gaussiana_espectral(psf):
    k, otf = otf_amostrada(psf, 0.01, 4096)
    np.testing.assert_allclose(otf, optical_transfer_function(psf, k), atol=1e-9)
    # espectro de amplitude ∝ exp(−k²σ²) cai a 1/e em k = 1/σ; a OTF em k = √2/σ
    positivos = k >= 0
    corte = np.interp(-1.0, -otf[positivos], k[positivos])
    assert corte == pytest.approx(np.sqrt(2.0) / psf.sigma, rel=1e-2)


def test_malha_gauss_legendre():
    x, w = malha_gauss_legendre(-3.0, 3.0, paineis=24, nos=8)
    assert x.shape == w.shape == (24 * 8,)
    assert w.sum() == pytest.approx(6.0, rel=1e-13)
    assert np.sum(w * x ** 2) == pytest.approx(18.0, rel=1e-12)
    gauss = np.sum(w * np.exp(-x * x / 2)) / np.sqrt(2 * np.pi)
    assert gauss == pytest.approx(0.99730020393674, rel=1e-9)
