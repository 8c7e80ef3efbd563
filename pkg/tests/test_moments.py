"""
Testes do pacote `moments`: momentos HG, estimação a partir de contagens,
reconstrução em suporte finito e linha de base limitada por difração.
"""

import numpy as np
import pytest

from subrayleigh.errors import DomainError
from subrayleigh.experiments import objeto_duas_barras
from subrayleigh.measure import interleaved_pmf, sample_record, spade_pmf
from subrayleigh.models import (EVEN_ONLY, INTERLEAVED, BasisKind, BudgetMode, DetectionRecord,
                                FieldGrid, IntensityGrid, ModeBasis)
from subrayleigh.moments import (amplitude_hg, build_model, coherent_moment, curva_l,
                                 diffraction_baseline, estimate_moments, grade_suporte,
                                 incoherent_moment, moment_set_from_grid, odd_moment,
                                 orbitas_espelhadas, ordens_ate, reconstruct,
                                 reconstruction_error, variacao_total)
from subrayleigh.scene import grid_to_constellation, symmetrize

from .conftest import solver_lp_disponivel

PIXELS, SUPORTE = 41, 0.4


def _duas_barras() -> IntensityGrid:
    X, _, passo = grade_suporte(SUPORTE, PIXELS)
    x = X[0]
    valores = np.where((x >= 0.05) & (x <= 0.15), 1.0, 0.0)
    valores += np.where((x >= -0.15) & (x <= -0.05), 0.6, 0.0)
    return IntensityGrid.normalized(valores[None, :], passo)


def _uniforme() -> IntensityGrid:
    _, _, passo = grade_suporte(SUPORTE, PIXELS)
    return IntensityGrid.normalized(np.ones((1, PIXELS)), passo)


def _registro(labels, contagens):
    return DetectionRecord("spade", int(np.sum(contagens)), BudgetMode.FIXED, 0, {}, labels,
                           counts=np.asarray(contagens))


def test_amplitude_hg():
    u = np.linspace(-2.0, 2.0, 9)
    np.testing.assert_allclose(amplitude_hg(u, 0), np.exp(-u * u / 2))
    np.testing.assert_allclose(amplitude_hg(u, 3), np.exp(-u * u / 2) * u ** 3 / np.sqrt(6.0))


def test_ordens():
    assert ordens_ate(2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert ordens_ate(2, 1) == ((0, 0), (1, 0), (2, 0))


def test_momentos_incoerentes_iguais_as_probabilidades_spade(psf):
    grade = _duas_barras()
    p = spade_pmf(grid_to_constellation(grade), psf).probabilities()
    for m in range(6):
        assert incoherent_moment(grade, m, 0, 1.0) == pytest.approx(p[m], rel=1e-10, abs=1e-300)


def test_momentos_impares_iguais_a_meia_diferenca_intercalada(psf):
    grade = _duas_barras()
    constelacao = grid_to_constellation(grade)
    for deslocamento, ks in ((0, (0, 2)), (1, (1, 3))):
        base = ModeBasis(BasisKind.INTERLEAVED, psf.width_param, 20,
                         interleave_offset=deslocamento)
        pmf = interleaved_pmf(constelacao, psf, base)
        p = dict(zip(pmf.labels, pmf.probabilities()))
        for k in ks:
            meia = 0.5 * (p[f"+{k},{k + 1}"] - p[f"-{k},{k + 1}"])
            assert odd_moment(grade, k, 1.0) == pytest.approx(meia, rel=1e-9)


def test_momentos_impares_nulos_para_objeto_simetrico():
    assert odd_moment(_uniforme(), 0, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert odd_moment(_duas_barras(), 0, 1.0) > 0.0


def test_momento_coerente_pixel_central():
    valores = np.zeros((3, 3), dtype=complex)
    valores[1, 1] = 2.0 + 1.0j
    campo = FieldGrid(valores, 0.1)
    assert coherent_moment(campo, 0, 0, 1.0) == pytest.approx((2.0 + 1.0j) * 0.01)
    assert coherent_moment(campo, 1, 0, 1.0) == pytest.approx(0.0)

    real = FieldGrid(np.array([[0.0, 0.0, 3.0]]), 0.5)
    esperado = 3.0 * amplitude_hg(0.5, 2) * 0.25
    assert coherent_moment(real, 2, 0, 1.0) == pytest.approx(esperado)
    with pytest.raises(DomainError):
        coherent_moment(real, -1, 0, 1.0)


def test_conjunto_exato_de_momentos():
    grade = _duas_barras()
    conjunto = moment_set_from_grid(grade, 1.0, max_order=3, odd=True)
    assert conjunto.parity == INTERLEAVED
    assert conjunto.orders == ((0, 0), (1, 0), (2, 0), (3, 0))
    assert conjunto.odd_orders == (0, 1, 2)
    assert conjunto.value(2) == pytest.approx(incoherent_moment(grade, 2, 0, 1.0))
    assert np.all(conjunto.stderr == 0.0)

    truncado = conjunto.truncated(1)
    assert truncado.orders == ((0, 0), (1, 0))
    assert truncado.odd_orders == (0,)


def test_estimativa_de_momentos_manual():
    conjunto = estimate_moments(_registro(("0", "1", "2", "bucket"), [80, 15, 5, 0]), 1.0)
    assert conjunto.parity == EVEN_ONLY
    np.testing.assert_allclose(conjunto.values, [0.8, 0.15, 0.05])
    np.testing.assert_allclose(conjunto.stderr[0], np.sqrt(0.8 * 0.2 / 100))

    intercalado = _registro(("+0,1", "-0,1", "2", "bucket"), [60, 30, 10, 0])
    conjunto = estimate_moments(_registro(("0", "1", "bucket"), [90, 10, 0]), 1.0, intercalado)
    assert conjunto.parity == INTERLEAVED
    assert conjunto.odd_orders == (0,)
    assert conjunto.odd_values[0] == pytest.approx(0.15)
    assert conjunto.odd_stderr[0] == pytest.approx(0.5 * np.sqrt((0.9 - 0.09) / 100))


def test_estimativa_de_momentos_simulada(psf):
    grade = _duas_barras()
    constelacao = grid_to_constellation(grade)
    registro = sample_record(spade_pmf(constelacao, psf), None, 1_000_000, seed=12)
    base = ModeBasis(BasisKind.INTERLEAVED, psf.width_param, 20)
    intercalado = sample_record(interleaved_pmf(constelacao, psf, base), None, 1_000_000,
                                seed=13)
    estimado = estimate_moments(registro, 1.0, intercalado)
    exato = moment_set_from_grid(grade, 1.0, max_order=1, odd=True)
    for m in (0, 1):
        assert abs(estimado.value(m) - exato.value(m)) < 5 * estimado.stderr[m] + 1e-12
    assert abs(estimado.odd_values[0] - exato.odd_values[0]) < 5 * estimado.odd_stderr[0]


def test_grade_de_suporte():
    X, Y, passo = grade_suporte(SUPORTE, PIXELS)
    assert X.shape == (1, PIXELS)
    assert passo == pytest.approx(2 * SUPORTE / PIXELS)
    assert X[0, PIXELS // 2] == pytest.approx(0.0, abs=1e-15)
    X2, _, _ = grade_suporte((0.4, 0.2), 20)
    assert X2.shape == (10, 20)
    with pytest.raises(DomainError):
        grade_suporte(0.0, 41)
    with pytest.raises(DomainError):
        grade_suporte(0.4, 1)


def test_reconstrucao_nnls_recupera_objeto_suave():
    verdade = _uniforme()
    momentos = moment_set_from_grid(verdade, 1.0, max_order=4, odd=True)
    resultado = reconstruct(momentos, SUPORTE, PIXELS, method="nnls")
    assert resultado.method == "nnls"
    assert not resultado.infeasible
    assert resultado.grid.values.sum() == pytest.approx(1.0)
    assert np.all(resultado.grid.values >= 0.0)
    assert reconstruction_error(resultado, verdade) < 1e-4


def test_reconstrucao_de_barras_normalizada():
    verdade = _duas_barras()
    momentos = moment_set_from_grid(verdade, 1.0, max_order=6, odd=True)
    resultado = reconstruct(momentos, SUPORTE, PIXELS, regularization=1e-4)
    assert resultado.grid.shape == (1, PIXELS)
    assert resultado.grid.values.sum() == pytest.approx(1.0)
    assert resultado.regularization == 1e-4
    assert np.isfinite(resultado.residual_norm)


@pytest.mark.skipif(not solver_lp_disponivel(), reason="HiGHS indisponível")
def test_reconstrucao_lp_recupera_objeto_suave():
    verdade = _uniforme()
    momentos = moment_set_from_grid(verdade, 1.0, max_order=4, odd=True)
    resultado = reconstruct(momentos, SUPORTE, PIXELS, method="lp")
    assert resultado.method == "lp"
    assert reconstruction_error(resultado, verdade) < 1e-3


def test_reconstrucao_valida_entrada():
    momentos = moment_set_from_grid(_uniforme(), 1.0, max_order=2)
    with pytest.raises(DomainError):
        reconstruct(momentos, SUPORTE, PIXELS, regularization=-1.0)
    with pytest.raises(DomainError):
        reconstruct(momentos, SUPORTE, PIXELS, method="simplex")
    resultado = reconstruct(momentos, SUPORTE, PIXELS)
    with pytest.raises(DomainError):
        reconstruction_error(resultado, IntensityGrid.normalized(np.ones((1, 5))))
    assert reconstruction_error(resultado, resultado.grid) == 0.0


def test_modelo_lp():
    A = np.array([[1.0, 0.5, 0.0], [0.0, 0.5, 1.0]])
    D = np.array([[1.0, -2.0, 1.0]])
    modelo = build_model(A, np.array([0.3, 0.7]), np.ones(2), D, 0.1, pares=[(2, 0)])
    assert len(modelo.P) == 3
    assert len(modelo.M) == 2
    assert len(modelo.S) == 1
    assert modelo.A[1, 2] == 1.0
    assert modelo.D[0, 1] == -2.0
    assert len(modelo.momentos) == 2
    assert len(modelo.simetria) == 1


def test_linha_de_base_por_difracao(psf):
    valores = np.zeros((1, 241))
    valores[0, 120] = 1.0
    imagem = diffraction_baseline(IntensityGrid(valores, 0.05), psf)
    assert imagem.sum() == pytest.approx(1.0, rel=1e-12)
    assert int(np.argmax(imagem)) == 120
    x = np.arange(11) * 0.05
    np.testing.assert_allclose(imagem[0, 120:131] / imagem[0, 120],
                               psf.intensity(x) / psf.intensity(0.0), rtol=1e-9)
    np.testing.assert_allclose(imagem[0, 120:], imagem[0, 120::-1], atol=1e-14)


# Objeto de referência: barras até as bordas do suporte declarado (meia-largura 0,205)
SUPORTE_REF = 0.205


def _referencia_e_momentos(max_order: int = 8):
    objeto = objeto_duas_barras(1.0)
    return objeto, moment_set_from_grid(objeto, 1.0, max_order=max_order)


def test_variacao_total_inclui_bordas_do_suporte():
    D = variacao_total(1, 3)
    assert D.shape == (4, 3)
    np.testing.assert_allclose(D @ np.ones(3), [1.0, 0.0, 0.0, -1.0])
    D2 = variacao_total(2, 3)
    assert D2.shape == (2 * 4 + 3 * 3, 6)
    # imagem plana de soma 1: só os saltos para zero nas bordas
    assert np.abs(D2 @ np.full(6, 1 / 6)).sum() == pytest.approx(2 * (2 + 3) / 6)


def test_orbitas_espelhadas():
    np.testing.assert_array_equal(orbitas_espelhadas(1, 5, True, False), [0, 1, 2, 1, 0])
    np.testing.assert_array_equal(orbitas_espelhadas(2, 3, True, True), [0, 1, 0, 0, 1, 0])
    np.testing.assert_array_equal(orbitas_espelhadas(2, 2, False, True), [0, 1, 0, 1])


def test_reconstrucao_so_pares_igual_a_da_simetrizacao():
    objeto, momentos = _referencia_e_momentos(6)
    simetrico = moment_set_from_grid(symmetrize(objeto), 1.0, max_order=6)
    a = reconstruct(momentos, SUPORTE_REF, 41, method="nnls")
    b = reconstruct(simetrico, SUPORTE_REF, 41, method="nnls")
    np.testing.assert_allclose(a.grid.values, b.grid.values, atol=1e-10)
    np.testing.assert_allclose(a.grid.values, a.grid.values[:, ::-1], atol=1e-12)


@pytest.mark.parametrize("method, lam", [("nnls", 1e6), ("lp", 1e3)])
def test_lambda_grande_leva_a_imagem_plana(method, lam):
    if method == "lp" and not solver_lp_disponivel():
        pytest.skip("HiGHS indisponível")
    _, momentos = _referencia_e_momentos(4)
    resultado = reconstruct(momentos, SUPORTE_REF, 41, regularization=lam, method=method)
    np.testing.assert_allclose(resultado.grid.values, 1.0 / 41, atol=1e-4)
    assert resultado.regularization == lam


@pytest.mark.skipif(not solver_lp_disponivel(), reason="HiGHS indisponível")
def test_variacao_total_preserva_as_barras():
    objeto, momentos = _referencia_e_momentos()
    resultado = reconstruct(momentos, SUPORTE_REF, 41, method="lp")
    parte_par = symmetrize(objeto)
    assert resultado.grid.shape == objeto.shape
    assert reconstruction_error(resultado, parte_par) < 0.02
    assert resultado.grid.values[0, 20] < 1e-6


@pytest.mark.skipif(not solver_lp_disponivel(), reason="HiGHS indisponível")
def test_erro_nao_cresce_com_a_ordem_dos_momentos():
    objeto, momentos = _referencia_e_momentos()
    erros = [reconstruction_error(reconstruct(momentos, SUPORTE_REF, 41, method="lp",
                                              max_order=ordem), objeto)
             for ordem in (2, 4, 6, 8)]
    for anterior, seguinte in zip(erros, erros[1:]):
        assert seguinte <= anterior + 1e-6


def test_curva_l_nnls():
    _, momentos = _referencia_e_momentos(4)
    lambdas = (1e-6, 1e-3, 1.0, 1e3)
    canto, desajustes, penalidades = curva_l(momentos, SUPORTE_REF, 41, lambdas, method="nnls")
    assert canto in lambdas
    assert desajustes.shape == penalidades.shape == (4,)
    assert penalidades[-1] < penalidades[0]
    assert desajustes[-1] > desajustes[0]
    with pytest.raises(DomainError):
        curva_l(momentos, SUPORTE_REF, 41, (-1.0, 1.0), method="nnls")
