"""
Módulo `converter`

Funções que transformam os resultados das simulações em DataFrames
organizados, prontos para exportação, e que separam as chaves de solver das
chaves de experimento num dicionário de configuração.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

import numpy as np
import pandas as pd

from subrayleigh.models import BiasCurve, DiscriminationResult, MCResult, MomentSet

CHAVES_SOLVER = {"solver_name", "tee", "tolerancia"}


def split_config(config: dict) -> tuple[dict, dict]:
    """
    Separa o dicionário de configuração em parâmetros do experimento e do solver.

    Args:
        config (dict): Configuração completa.

    Returns:
        tuple[dict, dict]: (config_modelo, config_solver).
    """
    config_solver = {k: v for k, v in config.items() if k in CHAVES_SOLVER}
    config_modelo = {k: v for k, v in config.items() if k not in CHAVES_SOLVER}
    return config_modelo, config_solver


def mc_para_df(mc: MCResult, delta_k: float, bias: BiasCurve | None = None) -> pd.DataFrame:
    """
    Converte um resultado de Monte Carlo em tabela por ponto da grade.

    Args:
        mc (MCResult): Resultado.
        delta_k (float): Largura de banda RMS, para a coluna adimensional θΔk.
        bias (BiasCurve, opcional): Inclui a derivada do viés quando fornecida.

    Returns:
        pd.DataFrame: Colunas theta, theta_dk, N_mse, N_mse_stderr, mse, bias, variance,
        mean_estimate (e bias_derivative).
    """
    df = pd.DataFrame({
        "theta": mc.theta_grid,
        "theta_dk": mc.theta_grid * delta_k,
        "N_mse": mc.photons * mc.mse,
        "N_mse_stderr": mc.photons * mc.mse_stderr,
        "mse": mc.mse,
        "bias": mc.bias,
        "variance": mc.variance,
        "mean_estimate": mc.mean_estimate,
    })
    if bias is not None:
        df["bias_derivative"] = bias.derivative
    df["N"] = mc.photons
    df["trials"] = mc.trials
    df["receiver"] = mc.receiver
    df["estimator"] = mc.estimator
    return df


def discriminacao_para_df(resultado: DiscriminationResult, receptor: str) -> pd.DataFrame:
    """Uma linha por N, com o expoente ajustado repetido em todas as linhas."""
    return pd.DataFrame({
        "receiver": receptor,
        "N": resultado.photons,
        "error_rate": resultado.error_rates,
        "fitted_exponent": resultado.fitted_exponent,
        "exponent_stderr": resultado.stderr,
        "lower_bound": resultado.lower_bound,
        "trials": resultado.trials,
    })


def momentos_para_df(momentos: MomentSet, exatos: MomentSet | None = None) -> pd.DataFrame:
    """
    Tabela de momentos pares P_mn e ímpares K_k.

    Quando `exatos` é fornecido, acrescenta o valor de referência e o desvio
    em unidades de erro padrão.
    """
    linhas = [{"tipo": "P", "m": m, "n": n, "valor": v, "stderr": s}
              for (m, n), v, s in zip(momentos.orders, momentos.values, momentos.stderr)]
    linhas += [{"tipo": "K", "m": k, "n": k + 1, "valor": v, "stderr": s}
               for k, v, s in zip(momentos.odd_orders, momentos.odd_values,
                                  momentos.odd_stderr)]
    df = pd.DataFrame(linhas, columns=["tipo", "m", "n", "valor", "stderr"])
    if exatos is not None and not df.empty:
        referencia = {("P", m, n): v for (m, n), v in zip(exatos.orders, exatos.values)}
        referencia.update({("K", k, k + 1): v
                           for k, v in zip(exatos.odd_orders, exatos.odd_values)})
        df["exato"] = [referencia.get((t, m, n), np.nan)
                       for t, m, n in zip(df["tipo"], df["m"], df["n"])]
        with np.errstate(divide="ignore", invalid="ignore"):
            df["z"] = (df["valor"] - df["exato"]) / df["stderr"]
    return df
