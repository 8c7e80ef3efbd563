"""
Testes do pacote `measure`: leis dos receptores, crosstalk, amostragem e
serialização de registros.
"""

import numpy as np
import pytest
from scipy.integrate import quad

from subrayleigh.errors import DomainError, UnsupportedError
from subrayleigh.measure import (DISCARD, apply_crosstalk, base_padrao, bspade_pmf, build_pmf,
                                 coherent_pair_pmf, direct_pdf, interleaved_pmf,
                                 record_from_json, record_to_json, restrict_outcomes,
                                 sample_counts, sample_record, sliver_pmf, spade_pmf,
                                 splice_pmf, trispade_pmf)
from subrayleigh.models import (BasisKind, BudgetMode, CoherentPairScene, Constellation,
                                ModeBasis, Receiver, ReceiverKind)
from subrayleigh.optics import make_sinc_psf

GRADE_THETA = np.round(np.arange(0.0, 3.01, 0.1), 10)


def _integral(pmf, params=None):
    a, b = pmf.integration_window(params)
    return quad(lambda x: float(pmf.density(x, params)), a, b, points=[0.0], limit=400,
                epsabs=1e-12)[0]


def test_direta_fontes_fundidas(psf, par):
    pmf = direct_pdf(par(0.0), psf)
    x = np.linspace(-2, 2, 21)
    np.testing.assert_allclose(pmf.density(x), psf.intensity(x), atol=1e-14)


def test_direta_valor_com_duas_corcovas(psf, par):
    pmf = direct_pdf(par(1.0), psf)
    esperado = (2 * np.pi * 0.25) ** -0.5 * np.exp(-0.5 ** 2 / (2 * 0.25))
    assert float(pmf.density(0.0)) == pytest.approx(esperado, rel=1e-12)


@pytest.mark.parametrize("theta", [0.0, 0.3, 2.0])
def test_direta_normalizada_e_simetrica(psf, par, theta):
    pmf = direct_pdf(par(theta, centroid=0.4), psf)
    assert _integral(pmf) == pytest.approx(1.0, abs=1e-9)
    x = np.linspace(0.0, 3.0, 13)
    np.testing.assert_allclose(pmf.density(0.4 + x), pmf.density(0.4 - x), atol=1e-14)


def test_spade_par_igual(psf, par):
    pmf = spade_pmf(par(0.2), psf)
    p = pmf.probabilities()
    assert pmf.labels[1] == "1"
    assert pmf.labels[-1] == "bucket"
    assert p[1] == pytest.approx(np.exp(-0.01) * 0.01, rel=1e-10)
    assert spade_pmf(par(0.0), psf).probabilities()[0] == 1.0


def test_spade_desalinhado(psf, par):
    c = 0.3
    p = spade_pmf(par(0.0), psf, alignment_offset=c).probabilities()
    assert p[1] == pytest.approx(np.exp(-c ** 2) * c ** 2, rel=1e-10)


def test_spade_aviso_de_vazamento(psf, par):
    pmf = spade_pmf(par(6.0), psf, cutoff=3)
    assert pmf.metadata["leakage"] > 1e-3
    assert pmf.metadata["warnings"]
    assert "warnings" not in spade_pmf(par(0.2), psf).metadata


def test_spade_marginal_de_paridade_igual_sliver(psf, par):
    for theta in (0.2, 1.0, 3.0):
        p = spade_pmf(par(theta), psf).probabilities()
        impar = p[1:-1:2].sum()
        sliver = sliver_pmf(par(theta), psf).probabilities()
        assert impar == pytest.approx(sliver[1], abs=1e-12)


def test_sliver_valores(psf, par):
    assert sliver_pmf(par(0.0), psf).probabilities()[1] == 0.0
    p = sliver_pmf(par(0.2), psf).probabilities()
    assert p[1] == pytest.approx(np.exp(-0.01) * np.sinh(0.01), rel=1e-12)
    assert p.sum() == pytest.approx(1.0, abs=1e-15)


def test_splice(psf, par, psf_sinc):
    assert splice_pmf(par(0.0), psf).probabilities()[0] == 0.0
    pmf = splice_pmf(par(0.5), psf)
    assert pmf.labels == ("click", DISCARD)
    for theta in GRADE_THETA:
        assert pmf.detected_fraction({"theta": theta}) <= 1.0
    with pytest.raises(UnsupportedError):
        splice_pmf(par(0.5), psf_sinc)


def test_todas_as_leis_somam_um(psf, par):
    leis = [spade_pmf(par(0.0), psf), sliver_pmf(par(0.0), psf), splice_pmf(par(0.0), psf),
            bspade_pmf(par(0.0), psf), trispade_pmf(par(0.0), psf),
            interleaved_pmf(par(0.0), psf)]
    for pmf in leis:
        for theta in GRADE_THETA:
            assert pmf.probabilities({"theta": theta}).sum() == pytest.approx(1.0, abs=1e-9)


def test_coerente_limites(psf):
    def modo_1(gamma, theta=0.05):
        pmf = coherent_pair_pmf(CoherentPairScene(theta, 1.0, gamma), psf)
        return pmf.probabilities()[1]

    assert modo_1(1.0) == pytest.approx(0.0, abs=1e-15)
    assert modo_1(-1.0) == pytest.approx(2.0 * modo_1(0.0), rel=1e-12)


def test_coerente_incoerente_igual_spade(psf, par):
    for theta in (0.1, 0.8, 2.0):
        coerente = coherent_pair_pmf(CoherentPairScene(theta, 1.0, 0.0), psf).probabilities()
        incoerente = spade_pmf(par(theta), psf).probabilities()
        np.testing.assert_allclose(coerente, incoerente, atol=1e-12)


def test_coerente_energia_total(psf):
    pmf = coherent_pair_pmf(CoherentPairScene(0.4, 1.0, 0.5), psf)
    assert pmf.poisson_intensity
    assert pmf.probabilities().sum() == pytest.approx(1.0 + 0.5 * np.exp(-0.08), rel=1e-12)


def test_bspade_e_trispade(psf, par):
    b = bspade_pmf(par(0.2), psf, target_mode=1)
    assert b.labels == ("1", "bucket")
    assert b.probabilities()[0] == pytest.approx(np.exp(-0.01) * 0.01, rel=1e-10)

    tri = trispade_pmf(par(0.2), psf)
    p = dict(zip(tri.labels, tri.probabilities()))
    assert p["1,0"] == pytest.approx(np.exp(-0.01) * 0.01, rel=1e-10)
    assert p["0,1"] == pytest.approx(0.0, abs=1e-15)

    girado = trispade_pmf(par(0.2), psf, rotation=np.pi / 2)
    p = dict(zip(girado.labels, girado.probabilities()))
    assert p["0,1"] == pytest.approx(np.exp(-0.01) * 0.01, rel=1e-8)


def test_spade_2d(psf):
    cena = Constellation.from_emitters([((0.1, -0.2), 0.5), ((-0.1, 0.2), 0.5)])
    pmf = spade_pmf(cena, psf, cutoff=3)
    assert "1,2" in pmf.labels
    p = dict(zip(pmf.labels, pmf.probabilities()))
    esperado = np.exp(-0.01) * 0.01 * np.exp(-0.04)
    assert p["1,0"] == pytest.approx(esperado, rel=1e-10)


def test_intercalada_ponto_deslocado(psf, par):
    base = ModeBasis(BasisKind.INTERLEAVED, 0.5, 5)
    pmf = interleaved_pmf(par(0.0, centroid=0.3), psf, base, alignment_offset=-0.3)
    assert pmf.labels[:2] == ("+0,1", "-0,1")
    u = 0.3
    a0, a1 = np.exp(-u * u / 2), np.exp(-u * u / 2) * u
    p = pmf.probabilities()
    assert p[0] == pytest.approx(0.5 * (a0 + a1) ** 2, rel=1e-12)
    assert p[1] == pytest.approx(0.5 * (a0 - a1) ** 2, rel=1e-12)


def test_crosstalk(psf, par):
    pmf = spade_pmf(par(0.6), psf, cutoff=2)
    assert apply_crosstalk(pmf, np.eye(4)) is pmf
    uniforme = apply_crosstalk(pmf, np.full((4, 4), 0.25))
    np.testing.assert_allclose(uniforme.probabilities(), 0.25, atol=1e-15)

    vazamento = np.eye(4)
    vazamento[:2, :2] = [[0.992, 0.008], [0.008, 0.992]]
    p = apply_crosstalk(spade_pmf(par(0.0), psf, cutoff=2), vazamento).probabilities()
    assert p[1] == pytest.approx(0.008, abs=1e-15)

    with pytest.raises(DomainError):
        apply_crosstalk(pmf, np.full((4, 4), 0.3))
    with pytest.raises(DomainError):
        apply_crosstalk(pmf, np.eye(3))


def test_restricao_de_resultados(psf, par):
    pmf = restrict_outcomes(spade_pmf(par(0.4), psf), ["1"])
    assert pmf.labels == ("1", DISCARD)
    p = pmf.probabilities()
    assert p.sum() == pytest.approx(1.0)
    assert pmf.detected_fraction() == pytest.approx(p[0])

    coerente = restrict_outcomes(coherent_pair_pmf(CoherentPairScene(0.4, 1.0, 0.3), psf), ["1"])
    assert coerente.labels == ("1",)


def test_build_pmf_despacho(psf, par):
    cena = par(0.3)
    assert build_pmf(cena, psf, Receiver(ReceiverKind.DIRECT)).receiver == "direct"
    assert build_pmf(cena, psf, Receiver(ReceiverKind.SLIVER)).labels == ("even", "odd")
    assert build_pmf(cena, psf, Receiver(ReceiverKind.BSPADE, target_mode=2)).labels == (
        "2", "bucket")
    receptor = Receiver(ReceiverKind.SPADE, base_padrao(psf, 2), alignment_offset=0.1,
                        crosstalk=np.eye(4))
    pmf = build_pmf(cena, psf, receptor)
    np.testing.assert_allclose(pmf.probabilities(),
                               spade_pmf(cena, psf, cutoff=2, alignment_offset=0.1)
                               .probabilities(), atol=1e-15)
    with pytest.raises(UnsupportedError):
        build_pmf(CoherentPairScene(0.3, 1.0, 0.0), psf, Receiver(ReceiverKind.DIRECT))


def test_registro_theta_nulo(psf, par):
    registro = sample_record(spade_pmf(par(0.0), psf), None, 500, seed=1)
    assert registro.counts[0] == 500
    assert registro.total_detected == 500


def test_registro_converge_binomial(psf, par):
    pmf = spade_pmf(par(0.2), psf)
    N = 1_000_000
    registro = sample_record(pmf, None, N, seed=11)
    p = np.exp(-0.01) * 0.01
    assert abs(registro.count("1") / N - p) <= 3 * np.sqrt(p * (1 - p) / N)


def test_registro_deterministico(psf, par):
    pmf = spade_pmf(par(0.5), psf)
    a = sample_record(pmf, None, 1000, BudgetMode.POISSON, seed=42)
    b = sample_record(pmf, None, 1000, BudgetMode.POISSON, seed=42)
    np.testing.assert_array_equal(a.counts, b.counts)
    direto = direct_pdf(par(0.5), psf)
    np.testing.assert_array_equal(sample_record(direto, None, 50, seed=3).positions,
                                  sample_record(direto, None, 50, seed=3).positions)


def test_registro_json(psf, par):
    registro = sample_record(spade_pmf(par(0.5), psf, cutoff=4), {"theta": 0.7}, 200, seed=5)
    copia = record_from_json(record_to_json(registro))
    assert copia.receiver == registro.receiver
    assert copia.params["theta"] == 0.7
    assert copia.budget_mode is BudgetMode.FIXED
    np.testing.assert_array_equal(copia.counts, registro.counts)
    with pytest.raises(DomainError):
        record_from_json('{"receiver": "spade"}')


def test_contagens_em_lote(psf, par):
    pmf = spade_pmf(par(0.5), psf, cutoff=4)
    contagens = sample_counts(pmf, None, 100, 64, rng=np.random.default_rng(0))
    assert contagens.shape == (64, 6)
    assert np.all(contagens.sum(axis=1) == 100)
    with pytest.raises(DomainError):
        sample_counts(pmf, None, 0, 1)


def test_amostrador_sinc_reproduz_densidade(par):
    psf = make_sinc_psf(2.0)
    registro = sample_record(direct_pdf(par(0.0), psf), None, 20000, seed=9)
    # P(|x| ≤ π/W) = ∫ sinc² no lobo central ≈ 0,9028
    fracao = np.mean(np.abs(registro.positions) <= np.pi / 2.0)
    assert fracao == pytest.approx(0.9028, abs=0.01)
