"""
Testes dos drivers `simular_*` a partir de configurações montadas como na
linha de comando (σ = 0,5, logo Δk = 1).
"""

import numpy as np
import pytest

from subrayleigh.cli import main
from subrayleigh.errors import DomainError
from subrayleigh.experiments import (objeto_duas_barras, simular_adaptativo, simular_chernoff,
                                     simular_coerencia, simular_momentos, simular_reconstrucao)
from subrayleigh.handler import extrair_configuracoes, ler_tabela

from .conftest import solver_lp_disponivel


def _config(**opcoes):
    return extrair_configuracoes({"sigma": 0.5, **opcoes})


def test_chernoff_spade_e_quantico():
    df, _ = simular_chernoff(_config(command="chernoff", theta="0.5,1"))
    np.testing.assert_allclose(df["xi_spade"], [0.0625, 0.25], rtol=1e-8)
    np.testing.assert_allclose(df["xi_quantum"], df["xi_spade"], rtol=1e-8)
    assert np.all(df["xi_direct"] < df["xi_spade"])


def test_coerencia_respeita_a_cota():
    df, _ = simular_coerencia(_config(command="coherence", theta="0.5", gamma="0,0.5"))
    assert len(df) == 2
    assert df["qfi_bound"].iloc[0] == pytest.approx(1.0)
    assert np.all(df["fi_spade"] <= df["qfi_bound"] * (1 + 1e-4))
    assert np.all(df["fi_derivative_mode"] <= df["fi_spade"] * (1 + 1e-6))
    with pytest.raises(DomainError):
        simular_coerencia(_config(command="coherence", theta="0.5", receiver="direct"))


def test_momentos_do_objeto_de_referencia():
    df, extras = simular_momentos(_config(command="moments", seed=4, N="200000"))
    assert list(df["tipo"]) == ["P"] * 5
    assert extras["parity"] == "even-only"


def test_objeto_de_referencia():
    objeto = objeto_duas_barras(1.0)
    assert objeto.shape == (1, 41)
    assert objeto.values.sum() == pytest.approx(1.0)
    assert objeto.values[0, 20] == 0.0


def test_adaptativo():
    df, _ = simular_adaptativo(_config(command="adaptive", theta="1", N="200", trials=200,
                                       offset=0.3, seed=9))
    assert len(df) == 1
    linha = df.iloc[0]
    assert linha["centroid_mse"] > 0.0
    assert linha["theta_mse_adaptive"] > 0.0
    assert linha["fi_static_misaligned"] <= 1.0 + 1e-6


def test_reconstrucao_grava_pgm(tmp_path):
    saida = tmp_path / "rec.csv"
    assert main(["reconstruct", "--seed", "3", "--N", "100000", "--out", str(saida)]) == 0
    assert saida.with_suffix(".pgm").exists()
    df = ler_tabela(saida)
    for coluna in ("x", "y", "reconstruction", "truth", "baseline"):
        assert coluna in df.columns
    assert df["reconstruction"].sum() == pytest.approx(1.0, rel=1e-6)
    assert np.all(df["reconstruction"] >= 0.0)


def test_momentos_de_um_milhao_de_fotons():
    df, _ = simular_momentos(_config(command="moments", seed=21, N="1000000", max_order=3))
    assert list(df["m"]) == [0, 1, 2, 3]
    exato = df["exato"].to_numpy()
    sigma = np.sqrt(exato * (1.0 - exato) / 1_000_000)
    assert np.all(np.abs(df["valor"].to_numpy() - exato) <= 3.0 * sigma)


@pytest.mark.skipif(not solver_lp_disponivel(), reason="HiGHS indisponível")
@pytest.mark.parametrize("seed", [0, 3])
def test_reconstrucao_supera_a_imagem_limitada_por_difracao(seed):
    _, extras = simular_reconstrucao(_config(command="reconstruct", seed=seed, N="1000000"))
    assert extras["method"] == "lp"
    assert not extras["infeasible"]
    assert extras["error_l2"] <= 0.5 * extras["baseline_error_l2"]


def test_reconstrucao_com_curva_l():
    df, extras = simular_reconstrucao(_config(command="reconstruct", seed=2, N="100000",
                                              method="nnls", regularization="auto"))
    assert extras["method"] == "nnls"
    assert extras["regularization"] > 0.0
    assert df["reconstruction"].sum() == pytest.approx(1.0, rel=1e-6)
