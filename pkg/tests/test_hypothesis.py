"""
Testes do pacote `hypothesis`: expoentes de Chernoff, entropias relativas e
discriminação simulada.
"""

import numpy as np
import pytest

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.hypothesis import (chernoff_exponent, exoplanet_relative_entropies,
                                    exoplanet_relative_entropies_exact, hipotese,
                                    leading_order_qce_grids, m_ary_qce, objetivo_s, qce,
                                    relative_entropy, simulate_discrimination)
from subrayleigh.information import leading_order_coefficient, mixture_model_from_scene
from subrayleigh.measure import (coherent_pair_pmf, direct_pdf, sliver_pmf, spade_pmf,
                                 splice_pmf)
from subrayleigh.models import CoherentPairScene, HypothesisPair, IntensityGrid

PEQUENOS = np.array([0.1, 0.15, 0.2, 0.25])


def test_chernoff_spade(psf, par):
    pmf = spade_pmf(par(1.0), psf)
    relatorio = chernoff_exponent(pmf, params1={"theta": 0.0})
    assert relatorio.value == pytest.approx(0.25, rel=1e-9)
    assert relatorio.s_star == pytest.approx(0.0, abs=1e-5)
    assert not relatorio.infinite


def test_chernoff_direto_ordem_dominante(psf, par):
    pmf = direct_pdf(par(0.0), psf)
    valores = [chernoff_exponent(pmf, params2={"theta": t}).value for t in PEQUENOS]
    assert leading_order_coefficient(PEQUENOS, valores, 4) == pytest.approx(1.0 / 16.0, rel=2e-2)


def test_chernoff_simetrico(psf, par):
    pmf = direct_pdf(par(0.0), psf)
    ida = chernoff_exponent(pmf, params1={"theta": 0.5}, params2={"theta": 1.0})
    volta = chernoff_exponent(pmf, params1={"theta": 1.0}, params2={"theta": 0.5})
    assert ida.value == pytest.approx(volta.value, rel=1e-6)
    assert ida.s_star == pytest.approx(1.0 - volta.s_star, abs=1e-4)
    assert ida.method == "gauss-legendre-grid"


def test_chernoff_hipoteses_iguais(psf, par):
    assert chernoff_exponent(spade_pmf(par(0.7), psf)).value == pytest.approx(0.0, abs=1e-12)
    assert relative_entropy(spade_pmf(par(0.7), psf)) == pytest.approx(0.0, abs=1e-12)


def test_chernoff_suportes_disjuntos(psf, par):
    pmf = spade_pmf(par(0.5), psf, cutoff=1)
    um = pmf.evolve(law=lambda p: np.array([1.0, 0.0, 0.0]))
    outro = pmf.evolve(law=lambda p: np.array([0.0, 1.0, 0.0]))
    relatorio = chernoff_exponent(um, outro)
    assert relatorio.infinite
    assert relatorio.value == float("inf")
    assert relative_entropy(um, outro) == float("inf")


def test_chernoff_exige_leis_compativeis(psf, par):
    with pytest.raises(DomainError):
        chernoff_exponent(spade_pmf(par(0.5), psf), direct_pdf(par(0.5), psf))
    with pytest.raises(DomainError):
        chernoff_exponent(spade_pmf(par(0.5), psf, cutoff=2), spade_pmf(par(0.5), psf, cutoff=3))
    coerente = coherent_pair_pmf(CoherentPairScene(0.5, 1.0, 0.5), psf)
    with pytest.raises(UnsupportedError):
        chernoff_exponent(coerente)


def test_objetivo_convexo():
    p1, p2 = np.array([0.7, 0.2, 0.1]), np.array([0.2, 0.3, 0.5])
    s = np.linspace(0.0, 1.0, 11)
    valores = np.array([objetivo_s(p1, p2, v) for v in s])
    assert valores[0] == pytest.approx(0.0, abs=1e-15)
    assert valores[-1] == pytest.approx(0.0, abs=1e-15)
    assert np.all(np.diff(valores, 2) >= -1e-14)


def test_entropia_relativa_spade(psf, par):
    pmf = spade_pmf(par(1.0), psf)
    # D(p_θ ‖ p_0) = ∞ (modos superiores ausentes em H₀); D(p_0 ‖ p_θ) = Q
    assert relative_entropy(pmf, params2={"theta": 0.0}) == float("inf")
    assert relative_entropy(pmf, params1={"theta": 0.0}) == pytest.approx(0.25, rel=1e-9)


def test_qce_par_incoerente(psf, par):
    modelo = mixture_model_from_scene(par(1.0), psf)
    relatorio = qce(modelo, params1={"theta": 0.0})
    assert relatorio.value == pytest.approx(0.25, rel=1e-12)
    assert relatorio.method == "pure-overlap"
    assert qce(modelo, params1={"theta": 0.0}, params2={"theta": 0.0}).value == 0.0


def test_qce_exige_primeira_hipotese_pura(psf, par):
    modelo = mixture_model_from_scene(par(1.0), psf)
    with pytest.raises(UnsupportedError):
        qce(modelo, params2={"theta": 0.0})


def test_qce_spade_atinge_o_limite_quantico(psf, par):
    modelo = mixture_model_from_scene(par(0.6), psf)
    classico = chernoff_exponent(spade_pmf(par(0.6), psf), params1={"theta": 0.0}).value
    assert classico == pytest.approx(qce(modelo, params1={"theta": 0.0}).value, rel=1e-9)


@pytest.mark.parametrize("fabrica", [direct_pdf, spade_pmf, sliver_pmf, splice_pmf])
def test_chernoff_limitado_pelo_quantico(psf, par, fabrica):
    for theta in (0.2, 0.5, 1.0, 2.0):
        classico = chernoff_exponent(fabrica(par(theta), psf), params1={"theta": 0.0}).value
        quantico = qce(mixture_model_from_scene(par(theta), psf), params1={"theta": 0.0}).value
        assert classico <= quantico + 1e-6


@pytest.mark.parametrize("fabrica, esperado, rel", [
    (sliver_pmf, 0.25, 2e-2),
    (splice_pmf, 1.0 / (2.0 * np.pi), 5e-2),
])
def test_chernoff_ordem_dominante_receptores_binarios(psf, par, fabrica, esperado, rel):
    valores = [chernoff_exponent(fabrica(par(t), psf), params1={"theta": 0.0}).value
               for t in PEQUENOS]
    assert leading_order_coefficient(PEQUENOS, valores, 2) == pytest.approx(esperado, rel=rel)


def test_vantagem_quadratica_do_spade(psf, par):
    thetas = np.geomspace(0.05, 0.4, 8)
    spade = [chernoff_exponent(spade_pmf(par(t), psf), params1={"theta": 0.0}).value
             for t in thetas]
    direto = [chernoff_exponent(direct_pdf(par(t), psf), params1={"theta": 0.0}).value
              for t in thetas]
    inclinacao = np.polyfit(np.log(thetas), np.log(np.divide(spade, direto)), 1)[0]
    assert inclinacao == pytest.approx(-2.0, abs=0.1)


def test_entropias_exoplaneta_ordem_dominante():
    entropias = exoplanet_relative_entropies(0.01, 1.0, 1.0)
    assert entropias.quantum == pytest.approx(6.059e-4, rel=1e-3)
    assert entropias.direct == pytest.approx(1.420e-5, rel=1e-3)
    assert entropias.leading_order
    with pytest.raises(DomainError):
        exoplanet_relative_entropies(1.0, 1.0, 1.0)


def test_entropias_exoplaneta_exatas_convergem(psf):
    b = 1e-5
    dominante = exoplanet_relative_entropies(b, 1.0, psf.delta_k)
    exata = exoplanet_relative_entropies_exact(b, 0.25, psf)
    assert not exata.leading_order
    assert exata.quantum == pytest.approx(dominante.quantum, rel=1e-3)
    assert exata.direct == pytest.approx(dominante.direct, rel=1e-3)


def test_m_ary_qce():
    matriz = np.array([[0.0, 1.0, 2.0], [1.0, 0.0, 3.0], [2.0, 3.0, 0.0]])
    assert m_ary_qce(matriz) == 1.0
    with pytest.raises(DomainError):
        m_ary_qce([[0.0]])
    with pytest.raises(DomainError):
        m_ary_qce([[0.0, 1.0], [2.0, 0.0]])
    with pytest.raises(DomainError):
        m_ary_qce([[1.0, 1.0], [1.0, 0.0]])


def test_matriz_qce_ordem_dominante():
    estreita = np.zeros((1, 9))
    estreita[0, [3, 5]] = 0.5
    larga = np.zeros((1, 9))
    larga[0, [2, 6]] = 0.5
    grades = [IntensityGrid(estreita, 0.1), IntensityGrid(larga, 0.1),
              IntensityGrid(larga.copy(), 0.1)]
    matriz = leading_order_qce_grids(grades, 1.0)
    np.testing.assert_allclose(matriz, matriz.T)
    assert np.all(np.diag(matriz) == 0.0)
    # só o eixo x contribui: A = 0,01 e A = 0,16
    s = np.linspace(0.0, 1.0, 200001)
    busca = np.max(s * 0.01 + (1 - s) * 0.16 - 0.01 ** s * 0.16 ** (1 - s))
    assert matriz[0, 1] == pytest.approx(busca, rel=1e-6)
    assert matriz[1, 2] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        leading_order_qce_grids(grades[:1], 1.0)


def test_discriminacao_ao_acaso(psf, par):
    pmf = spade_pmf(par(0.5), psf)
    resultado = simulate_discrimination(HypothesisPair(pmf, pmf), [1, 2, 3, 4], 200, seed=5)
    np.testing.assert_allclose(resultado.error_rates, 0.5)
    assert resultado.fitted_exponent == pytest.approx(0.0, abs=1e-12)
    assert not resultado.lower_bound


def test_discriminacao_spade_recupera_expoente(psf, par):
    pmf = spade_pmf(par(1.0), psf)
    pair = HypothesisPair(hipotese(pmf, theta=0.0), pmf)
    resultado = simulate_discrimination(pair, [2, 4, 8, 16], 20000, seed=7)
    # P_e = ½·e^{−NQ} com Q = 1/4
    np.testing.assert_allclose(resultado.error_rates, 0.5 * np.exp(-0.25 * resultado.photons),
                               rtol=0.25)
    assert resultado.fitted_exponent == pytest.approx(0.25, abs=0.03)
    repetido = simulate_discrimination(pair, [2, 4, 8, 16], 20000, seed=7)
    np.testing.assert_array_equal(resultado.error_rates, repetido.error_rates)


def test_discriminacao_direta_bem_abaixo_do_spade(psf, par):
    expoentes = {}
    for nome, fabrica in (("spade", spade_pmf), ("direct", direct_pdf)):
        pmf = fabrica(par(0.5), psf)
        pair = HypothesisPair(hipotese(pmf, theta=0.0), pmf)
        expoentes[nome] = simulate_discrimination(pair, [8, 16, 32, 64], 20000,
                                                  seed=11).fitted_exponent
    assert expoentes["spade"] == pytest.approx(0.0625, abs=0.01)
    assert expoentes["direct"] <= expoentes["spade"] / 3.0


def test_discriminacao_valida_entrada(psf, par):
    pmf = spade_pmf(par(1.0), psf)
    with pytest.raises(DomainError):
        simulate_discrimination(HypothesisPair(pmf, pmf), [1, 2, 3], 100)
    with pytest.raises(UnsupportedError):
        simulate_discrimination(HypothesisPair(mixture_model_from_scene(par(1.0), psf), pmf),
                                [1, 2, 3, 4], 100)
