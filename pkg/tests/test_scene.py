"""
Testes do pacote `scene` e dos tipos de cena.
"""

import numpy as np
import pytest

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.models import (CoherentPairScene, Constellation, IntensityGrid,
                                TwoPointScene)
from subrayleigh.scene import (grid_to_constellation, linear_constellation, mixture_components,
                               second_moments, shift_scene, symmetrize)


def test_componentes_par_igual():
    assert mixture_components(TwoPointScene(0.0, 0.4, 0.5)) == [(0.5, -0.2), (0.5, 0.2)]


def test_componentes_separacao_nula():
    comps = mixture_components(TwoPointScene(0.3, 0.0, 0.5))
    assert [d for _, d in comps] == [0.3, 0.3]


def test_componentes_constelacao_uniforme():
    comps = mixture_components(linear_constellation(3, 0.1))
    np.testing.assert_allclose([w for w, _ in comps], 1.0 / 3.0, atol=1e-15)
    np.testing.assert_allclose([d for _, d in comps], [-0.1, 0.0, 0.1], atol=1e-15)


def test_componentes_equivariantes_por_translacao():
    cena = Constellation.from_emitters([(-0.2, 0.5), (0.1, 0.3), (0.4, 0.2)])
    originais = mixture_components(cena)
    deslocadas = mixture_components(shift_scene(cena, 0.7))
    for (w0, d0), (w1, d1) in zip(originais, deslocadas):
        assert w1 == w0
        assert d1 == pytest.approx(d0 + 0.7)


def test_invariantes_dos_tipos():
    with pytest.raises(DomainError):
        TwoPointScene(0.0, -0.1, 0.5)
    with pytest.raises(DomainError):
        TwoPointScene(0.0, 0.1, 1.5)
    with pytest.raises(DomainError):
        CoherentPairScene(0.1, 1.0, 1.2)
    with pytest.raises(DomainError):
        CoherentPairScene(0.1, 0.0, 0.0)
    with pytest.raises(DomainError):
        Constellation(np.array([0.0, 1.0]), np.array([0.5, 0.4]))
    with pytest.raises(DomainError):
        IntensityGrid(np.array([[0.5, -0.1, 0.6]]))


def test_segundos_momentos_pixel_unico():
    valores = np.zeros((5, 5))
    valores[2, 2] = 1.0
    assert second_moments(IntensityGrid(valores, 0.1)) == (0.0, 0.0)


def test_segundos_momentos_dois_pixels():
    valores = np.zeros((1, 7))
    valores[0, 1] = valores[0, 5] = 0.5
    mx, my = second_moments(IntensityGrid(valores, 0.25))
    assert mx == pytest.approx(0.5 ** 2)
    assert my == 0.0


def test_segundos_momentos_linha_uniforme():
    pixels, L = 401, 1.0
    grade = IntensityGrid.normalized(np.ones((1, pixels)), L / pixels)
    mx, _ = second_moments(grade)
    # variância discreta: (L²/12)(1 − 1/pixels²)
    assert mx == pytest.approx(L ** 2 / 12.0, rel=2.0 / pixels ** 2)


def test_segundos_momentos_invariancia_e_escala():
    rng = np.random.default_rng(3)
    valores = np.zeros((9, 9))
    valores[2:6, 3:7] = rng.random((4, 4))
    grade = IntensityGrid.normalized(valores, 0.1)
    transladada = IntensityGrid.normalized(np.roll(valores, (2, 1), axis=(0, 1)), 0.1)
    np.testing.assert_allclose(second_moments(grade), second_moments(transladada), rtol=1e-12)
    dilatada = IntensityGrid.normalized(valores, 0.3)
    np.testing.assert_allclose(second_moments(dilatada), 9.0 * np.array(second_moments(grade)),
                               rtol=1e-12)


def test_grade_para_constelacao_e_simetrizacao():
    valores = np.array([[0.0, 2.0, 0.0, 1.0, 1.0]])
    grade = IntensityGrid.normalized(valores, 0.5)
    constelacao = grid_to_constellation(grade)
    assert constelacao.dimensionality == 1
    np.testing.assert_allclose(constelacao.positions, [-0.5, 0.5, 1.0])
    np.testing.assert_allclose(constelacao.brightness, [0.5, 0.25, 0.25])
    simetrica = symmetrize(grade)
    np.testing.assert_allclose(simetrica.values, simetrica.values[:, ::-1])
    assert simetrica.values.sum() == pytest.approx(1.0)

    dois_d = IntensityGrid.normalized(np.eye(3), 1.0)
    assert grid_to_constellation(dois_d).dimensionality == 2


def test_translacao_de_grade_nao_suportada():
    with pytest.raises(UnsupportedError):
        shift_scene(IntensityGrid.normalized(np.ones((1, 3))), 0.1)
