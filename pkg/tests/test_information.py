"""
Testes do pacote `information`: informação de Fisher clássica, QFI e cotas.
"""

import numpy as np
import pytest

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.information import (bias_corrected_crb, build_bound_report, coherent_model,
                                     exoplanet_model, fidelity, fisher_matrix, fisher_scalar,
                                     gaussian_prior_information, kappa,
                                     leading_order_coefficient, localization_model,
                                     mixture_model_from_scene, modified_fi_relative, qcrb_3d,
                                     qfi_from_fidelity, qfi_partial_coherence_bound,
                                     van_trees_bound)
from subrayleigh.measure import (apply_crosstalk, direct_pdf, sliver_pmf, spade_pmf,
                                 splice_pmf)
from subrayleigh.models import CoherentPairScene

PEQUENOS = np.array([0.05, 0.1, 0.15, 0.2])


def test_fi_direta_localizacao(psf, par):
    # fonte única: I = 1/σ² = 4Δk²
    pmf = direct_pdf(par(0.0), psf)
    assert fisher_scalar(pmf, param="centroid") == pytest.approx(4.0, rel=1e-6)


def test_fi_direta_cai_quadraticamente(psf, par):
    pmf = direct_pdf(par(0.0), psf)
    valores = [fisher_scalar(pmf, t) for t in PEQUENOS]
    assert leading_order_coefficient(PEQUENOS, valores, 2) == pytest.approx(2.0, rel=1e-2)


@pytest.mark.parametrize("theta", [0.1, 0.5, 1.0, 3.0])
def test_fi_spade_constante(psf, par, theta):
    assert fisher_scalar(spade_pmf(par(theta), psf)) == pytest.approx(1.0, rel=1e-6)


def test_fi_spade_nula_na_origem(psf, par):
    assert fisher_scalar(spade_pmf(par(0.0), psf)) == 0.0


@pytest.mark.parametrize("fabrica, potencia, esperado", [
    (spade_pmf, 2, 1.0),
    (sliver_pmf, 2, 1.0),
    (splice_pmf, 2, 2.0 / np.pi),
    (direct_pdf, 4, 2.0),
])
def test_coeficientes_da_fi_modificada(psf, par, fabrica, potencia, esperado):
    modificadas = [modified_fi_relative(fisher_scalar(fabrica(par(t), psf)), t) for t in PEQUENOS]
    assert leading_order_coefficient(PEQUENOS, modificadas, potencia) == pytest.approx(
        esperado, rel=1e-2)


def test_fi_modificada_indefinida_na_origem():
    with pytest.raises(DomainError):
        modified_fi_relative(1.0, 0.0)


def test_fi_spade_desalinhado_cresce_com_theta_ao_quadrado(psf, par):
    pmf = spade_pmf(par(0.0), psf, alignment_offset=0.3)
    razao = fisher_scalar(pmf, 0.02) / fisher_scalar(pmf, 0.01)
    assert razao == pytest.approx(4.0, rel=1e-2)
    assert fisher_scalar(pmf, 0.01) < fisher_scalar(spade_pmf(par(0.01), psf))


def test_crosstalk_reduz_informacao(psf, par):
    pmf = spade_pmf(par(0.2), psf, cutoff=2)
    anterior = np.inf
    for eps in (0.0, 0.001, 0.01, 0.05):
        X = np.eye(4)
        X[:2, :2] = [[1.0 - eps, eps], [eps, 1.0 - eps]]
        valor = fisher_scalar(apply_crosstalk(pmf, X))
        assert valor < anterior
        anterior = valor


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_crosstalk_aleatorio_nao_aumenta_informacao(psf, par, seed):
    pmf = spade_pmf(par(0.3), psf, cutoff=2)
    rng = np.random.default_rng(seed)
    anterior = fisher_scalar(pmf)
    for t in (0.1, 0.4, 0.8):
        R = rng.random((4, 4))
        R /= R.sum(axis=1, keepdims=True)
        pmf = apply_crosstalk(pmf, (1.0 - t) * np.eye(4) + t * R)
        valor = fisher_scalar(pmf)
        assert valor <= anterior + 1e-9
        anterior = valor


@pytest.mark.parametrize("fabrica", [direct_pdf, spade_pmf, sliver_pmf, splice_pmf])
def test_fi_limitada_pela_qfi(psf, par, fabrica):
    for theta in (0.1, 0.5, 1.0, 2.0):
        qfi = qfi_from_fidelity(mixture_model_from_scene(par(theta), psf))
        assert fisher_scalar(fabrica(par(theta), psf)) <= qfi + 1e-6


def test_fi_invariante_a_rotulos_e_resultados_nulos(psf, par):
    pmf = spade_pmf(par(0.5), psf, cutoff=2)
    lei = pmf.law
    ordem = [3, 1, 0, 2]
    permutada = pmf.evolve(law=lambda p: np.asarray(lei(p))[ordem],
                           labels=tuple(pmf.labels[i] for i in ordem))
    ampliada = pmf.evolve(law=lambda p: np.append(lei(p), [0.0, 0.0]),
                          labels=pmf.labels + ("extra1", "extra2"))
    referencia = fisher_scalar(pmf)
    assert fisher_scalar(permutada) == pytest.approx(referencia, rel=1e-12)
    valor, flags = fisher_scalar(ampliada, return_flags=True)
    assert valor == pytest.approx(referencia, rel=1e-12)
    assert not flags


def test_fisher_scalar_erros(psf, par):
    pmf = spade_pmf(par(0.5), psf)
    with pytest.raises(DomainError):
        fisher_scalar(pmf, step=0.0)
    with pytest.raises(DomainError):
        fisher_scalar(pmf, param="phi")


def test_fisher_matrix_flags(psf, par):
    degenerada = fisher_matrix(spade_pmf(par(0.0), psf), names=("centroid", "theta"))
    assert "degenerate" in degenerada.flags
    assert degenerada.rank_deficient
    assert degenerada.degenerate_params == ("centroid", "theta")

    parcial = fisher_matrix(spade_pmf(par(0.5), psf), names=("centroid", "theta"))
    assert parcial.degenerate_params == ("centroid",)
    assert parcial.entry("theta") == pytest.approx(1.0, rel=1e-6)

    direta = fisher_matrix(direct_pdf(par(0.5), psf), names=("centroid", "theta"))
    assert not direta.flags
    assert direta.entry("centroid", "theta") == pytest.approx(0.0, abs=1e-8)
    assert direta.per_photon


def test_qfi_par_incoerente(psf, par):
    for theta in (0.2, 1.0, 2.5):
        modelo = mixture_model_from_scene(par(theta), psf)
        assert qfi_from_fidelity(modelo) == pytest.approx(1.0, rel=1e-5)


def test_qfi_localizacao(psf):
    assert qfi_from_fidelity(localization_model(psf), param="x0") == pytest.approx(4.0, rel=1e-5)


def test_fidelidade_limites(psf, par):
    modelo = mixture_model_from_scene(par(0.5), psf)
    assert fidelity(modelo) == pytest.approx(1.0, abs=1e-12)
    assert fidelity(modelo, params_b={"theta": 40.0}) < 1e-6


def test_exoplaneta_valida_brilho(psf):
    with pytest.raises(DomainError):
        exoplanet_model(0.0, 0.1, psf)
    assert exoplanet_model(0.01, 0.1, psf).params()["b"] == 0.01


def test_kappa(psf, psf_sinc):
    assert kappa(0.0, psf) == 1.0
    assert kappa(1.0, psf) == pytest.approx(0.0, abs=1e-15)
    assert kappa(0.0, psf_sinc) == pytest.approx(1.0, rel=1e-10)
    W, t = np.sqrt(3.0), 1.0
    fechada = 3.0 / (W * t) ** 3 * (((W * t) ** 2 - 2.0) * np.sin(W * t)
                                    + 2.0 * W * t * np.cos(W * t))
    assert kappa(t, psf_sinc) == pytest.approx(fechada, rel=1e-8)


@pytest.mark.parametrize("gamma, theta", [(1.0, 0.5), (-1.0, 0.5), (1.0, 1.0), (1j, 0.7)])
def test_qfi_coerente_atinge_a_cota(psf, gamma, theta):
    cena = CoherentPairScene(theta, 1.0, gamma)
    qfi = qfi_from_fidelity(coherent_model(cena, psf))
    assert qfi == pytest.approx(qfi_partial_coherence_bound(gamma, theta, psf, 1.0), rel=1e-5)


def test_coerente_exige_estado_puro(psf):
    with pytest.raises(UnsupportedError):
        coherent_model(CoherentPairScene(0.5, 1.0, 0.5), psf)


def test_cota_de_coerencia_parcial(psf):
    assert qfi_partial_coherence_bound(0.0, 0.3, psf, 10.0) == pytest.approx(10.0)
    u = 0.3 ** 2
    esperado = 1.0 - 0.5 * (1.0 - u) * np.exp(-u / 2.0)
    assert qfi_partial_coherence_bound(0.5, 0.3, psf, 1.0) == pytest.approx(esperado, rel=1e-12)
    with pytest.raises(DomainError):
        qfi_partial_coherence_bound(1.5, 0.3, psf, 1.0)


def test_qcrb_3d():
    np.testing.assert_allclose(qcrb_3d(1.0, 10.0, 1.0), np.diag([1.0, 1.0, 100.0]))
    np.testing.assert_allclose(qcrb_3d(2.0, 1.0, 4.0), np.diag([1 / 16, 1 / 16, 1 / 64]))
    with pytest.raises(DomainError):
        qcrb_3d(0.0, 1.0, 1.0)


def test_crb_corrigida_por_vies():
    assert bias_corrected_crb(0.0, 0.0, 1.0, 100) == pytest.approx(0.01)
    assert bias_corrected_crb(0.1, -1.0, 0.0, 100) == pytest.approx(0.01)
    curva = bias_corrected_crb([0.0, 0.2], [0.0, 1.0], [2.0, 4.0], 10)
    np.testing.assert_allclose(curva, [0.05, 0.1 + 0.04])
    with pytest.raises(DomainError):
        bias_corrected_crb(0.0, 0.0, 1.0, 0)


def test_van_trees():
    assert van_trees_bound(1.0, 1.0, 100) == pytest.approx(1.0 / 101.0)
    assert van_trees_bound(gaussian_prior_information(0.5), 0.0, 10) == pytest.approx(0.25)
    assert van_trees_bound(0.0, 0.0, 10) == float("inf")
    with pytest.raises(DomainError):
        gaussian_prior_information(0.0)


def test_relatorio_de_cotas(psf, par):
    fisher = fisher_matrix(spade_pmf(par(0.5), psf), names=("theta",))
    relatorio = build_bound_report(fisher, 1000, qfi=1.0)
    assert relatorio.crb[0, 0] == pytest.approx(1e-3, rel=1e-6)
    assert relatorio.qcrb[0, 0] == pytest.approx(1e-3)
    assert relatorio.psd_violation > -1e-8

    direta = fisher_matrix(direct_pdf(par(0.5), psf), names=("theta",))
    folga = build_bound_report(direta, 1000, qfi=1.0).psd_violation
    assert folga > 0.0
    with pytest.raises(DomainError):
        build_bound_report(fisher, 0)
