"""
Módulo `lp_builder`

Modelo Pyomo da reconstrução L1: minimiza o desajuste ponderado dos momentos
mais λ vezes a norma L1 de D·I, com intensidades não negativas, soma unitária
e, opcionalmente, pixels espelhados iguais. Com D = `variacao_total` a
penalidade é a variação total da imagem no suporte.

    min  Σ_i w_i (r⁺_i + r⁻_i) + λ Σ_j (s⁺_j + s⁻_j)
    s.a. Σ_p A_ip I_p − v_i = r⁺_i − r⁻_i
         Σ_p D_jp I_p       = s⁺_j − s⁻_j
         Σ_p I_p = 1,   I_p = I_q para (p, q) espelhados,   I, r±, s± ≥ 0

A construção segue a ordem conjuntos → parâmetros → variáveis → restrições →
objetivo.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
from typing import Sequence

import numpy as np
from pyomo.environ import (ConcreteModel, Constraint, NonNegativeReals, Objective, Param, Set,
                           SolverFactory, TerminationCondition, Var, minimize, value)

from subrayleigh.errors import NumericalError

logger = logging.getLogger(__name__)

SOLVER_PADRAO = "appsi_highs"


def definir_conjuntos(model, A: np.ndarray, D: np.ndarray, pares: Sequence[tuple[int, int]]):
    """Pixels P, momentos M, linhas da penalidade S e pares espelhados E."""
    model.P = Set(initialize=range(A.shape[1]))
    model.M = Set(initialize=range(A.shape[0]))
    model.S = Set(initialize=range(D.shape[0]))
    model.E = Set(initialize=range(len(pares)))


def definir_parametros(model, A: np.ndarray, v: np.ndarray, pesos: np.ndarray,
                       D: np.ndarray, lam: float):
    """Matriz direta, momentos alvo, pesos e operador D (apenas entradas não nulas)."""
    model.A = Param(model.M, model.P, initialize=lambda m, i, p: float(A[i, p]), default=0.0)
    model.v = Param(model.M, initialize=lambda m, i: float(v[i]))
    model.w = Param(model.M, initialize=lambda m, i: float(pesos[i]), within=NonNegativeReals)
    model.D = Param(model.S, model.P, default=0.0,
                    initialize={(j, p): float(D[j, p]) for j, p in zip(*np.nonzero(D))})
    model.lam = Param(initialize=float(lam), within=NonNegativeReals)


def definir_variaveis(model):
    """Intensidades e partes positiva/negativa dos resíduos."""
    model.I = Var(model.P, domain=NonNegativeReals)
    model.r_mais = Var(model.M, domain=NonNegativeReals)
    model.r_menos = Var(model.M, domain=NonNegativeReals)
    model.s_mais = Var(model.S, domain=NonNegativeReals)
    model.s_menos = Var(model.S, domain=NonNegativeReals)


def definir_restricoes(model, D: np.ndarray, pares: Sequence[tuple[int, int]]):
    """Ajuste dos momentos, penalidade, normalização e simetria."""
    vizinhos = {j: np.nonzero(D[j])[0].tolist() for j in range(D.shape[0])}

    def momento_rule(m, i):
        return (sum(m.A[i, p] * m.I[p] for p in m.P) - m.v[i]
                == m.r_mais[i] - m.r_menos[i])
    model.momentos = Constraint(model.M, rule=momento_rule)

    def penalidade_rule(m, j):
        return sum(m.D[j, p] * m.I[p] for p in vizinhos[j]) == m.s_mais[j] - m.s_menos[j]
    model.penalidade = Constraint(model.S, rule=penalidade_rule)

    model.normalizacao = Constraint(expr=sum(model.I[p] for p in model.P) == 1.0)

    def simetria_rule(m, e):
        p, q = pares[e]
        return m.I[p] == m.I[q]
    model.simetria = Constraint(model.E, rule=simetria_rule)


def definir_objetivo(model):
    """Desajuste L1 ponderado mais penalidade L1 de D·I."""
    model.objetivo = Objective(
        expr=sum(model.w[i] * (model.r_mais[i] + model.r_menos[i]) for i in model.M)
        + model.lam * sum(model.s_mais[j] + model.s_menos[j] for j in model.S),
        sense=minimize,
    )


def build_model(A: np.ndarray, v: np.ndarray, pesos: np.ndarray, D: np.ndarray,
                lam: float, pares: Sequence[tuple[int, int]] = ()) -> ConcreteModel:
    """
    Constrói o modelo completo.

    Args:
        A (np.ndarray): Matriz momentos × pixels.
        v (np.ndarray): Momentos medidos.
        pesos (np.ndarray): Pesos 1/σ de cada momento.
        D (np.ndarray): Operador da penalidade (variação total).
        lam (float): Peso da penalidade.
        pares (list[tuple[int, int]]): Pixels obrigados a ter a mesma intensidade.

    Returns:
        ConcreteModel: Modelo pronto para o solver.
    """
    model = ConcreteModel()
    definir_conjuntos(model, A, D, pares)
    definir_parametros(model, A, v, pesos, D, lam)
    definir_variaveis(model)
    definir_restricoes(model, D, pares)
    definir_objetivo(model)
    return model


def solver_disponivel(solver_name: str = SOLVER_PADRAO) -> bool:
    """Indica se o solver está acessível pelo Pyomo."""
    try:
        return bool(SolverFactory(solver_name).available(exception_flag=False))
    except Exception:  # pylint: disable=broad-except
        return False


def resolver(model: ConcreteModel, solver_name: str = SOLVER_PADRAO,
             tee: bool = False) -> np.ndarray:
    """
    Resolve o modelo e devolve as intensidades por pixel.

    Raises:
        NumericalError: Solver indisponível ou término não ótimo.
    """
    if not solver_disponivel(solver_name):
        raise NumericalError(f"❌ Solver '{solver_name}' indisponível.", {"solver": solver_name})
    try:
        resultado = SolverFactory(solver_name).solve(model, tee=tee)
    except RuntimeError as exc:
        raise NumericalError("❌ Falha do solver na reconstrução.",
                             {"solver": solver_name, "mensagem": str(exc)}) from exc
    condicao = resultado.solver.termination_condition
    if condicao != TerminationCondition.optimal:
        raise NumericalError("❌ Programa linear da reconstrução não atingiu o ótimo.",
                             {"solver": solver_name, "termination": str(condicao)})
    logger.debug("✅ LP resolvido com objetivo %.6e.", value(model.objetivo))
    return np.array([value(model.I[p]) for p in model.P], dtype=float)
