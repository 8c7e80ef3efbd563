"""
Módulo `experimentos`

Um driver `simular_*` por subcomando da linha de comando. Cada driver recebe a
`RunConfig` validada, executa o experimento ao longo da grade de θ e devolve
um DataFrame com os resultados e um dicionário de extras (linhas adicionais
de cabeçalho e artefatos).

Convenções:
- a grade e o desalinhamento são adimensionais (θΔk, cΔk);
- comandos estocásticos derivam uma semente por ponto externo do laço como
  `seed + índice`, e os fluxos internos seguem `utils.rng.gerador`.

Autor: Giovani Santiago Junqueira
"""

from __future__ import annotations

__author__ = "Giovani Santiago Junqueira"

import logging
import time
from typing import Optional

import numpy as np
import pandas as pd

from subrayleigh.errors import DomainError
from subrayleigh.estimate import (adaptive_mse, empirical_bias, monte_carlo_mse,
                                  spade_poisson_mse)
from subrayleigh.handler.config_handler import RunConfig
from subrayleigh.hypothesis import chernoff_exponent, hipotese, qce, simulate_discrimination
from subrayleigh.information import (bias_corrected_crb, fisher_scalar, mixture_model_from_scene,
                                     modified_fi_relative, qfi_from_fidelity,
                                     qfi_partial_coherence_bound)
from subrayleigh.measure import (base_padrao, build_pmf, interleaved_pmf, record_to_json,
                                 restrict_outcomes, sample_record, spade_pmf)
from subrayleigh.models import (PSF, BasisKind, BudgetMode, CoherentPairScene, EstimatorKind,
                                EstimatorSpec, HypothesisPair, IntensityGrid, ModeBasis,
                                PSFKind, Receiver, ReceiverKind, TwoPointScene)
from subrayleigh.moments import (SOLVER_PADRAO, curva_l, diffraction_baseline, estimate_moments,
                                 moment_set_from_grid, reconstruct, reconstruction_error,
                                 solver_disponivel)
from subrayleigh.optics import make_gaussian_psf, make_sinc_psf
from subrayleigh.utils import (carregar_crosstalk, carregar_psf, discriminacao_para_df,
                               mc_para_df, momentos_para_df, split_config)

logger = logging.getLogger(__name__)

RECEPTORES_CHERNOFF = ("direct", "spade", "sliver", "splice")
ORDEM_MOMENTOS = 4
# I abaixo desta fração de Δk² é tratada como nula (CRB infinita)
FI_NULA = 1e-14


def construir_psf(config: RunConfig) -> PSF:
    """PSF gaussiana (`--sigma`), sinc (`--k-halfwidth`) ou amostrada de arquivo."""
    tipo = str(config.get("psf"))
    if tipo == "gaussian":
        return make_gaussian_psf(float(config.get("sigma")))
    if tipo == "sinc":
        return make_sinc_psf(float(config.get("k_halfwidth")))
    return carregar_psf(tipo)


def construir_receptor(config: RunConfig, psf: PSF, tipo: Optional[str] = None,
                       dimensao: int = 1) -> Receiver:
    """Receptor com base padrão, desalinhamento (em 1/Δk) e crosstalk opcional."""
    kind = ReceiverKind(tipo or config.get("receiver"))
    if kind is ReceiverKind.TRISPADE:
        dimensao = 2
    arquivo = config.get("crosstalk_file")
    # O crosstalk configurado vale apenas para o receptor escolhido em --receiver
    crosstalk = carregar_crosstalk(arquivo) if arquivo and tipo is None else None
    basis = None
    if kind is not ReceiverKind.DIRECT:
        basis = base_padrao(psf, int(config.get("basis_cutoff")), dimensao)
    return Receiver(kind=kind, basis=basis,
                    alignment_offset=float(config.get("offset")) / psf.delta_k,
                    crosstalk=crosstalk)


def _modo_orcamento(config: RunConfig) -> BudgetMode:
    return BudgetMode.POISSON if config.get("budget") == "poisson" else BudgetMode.FIXED


def _crb(I: float, delta_k: float) -> float:
    return float("inf") if I <= FI_NULA * delta_k ** 2 else 1.0 / I


def simular_bounds(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    Informação de Fisher da imagem direta e do receptor configurado, QFI e as
    cotas N·CRB e N·QCRB ao longo da grade.

    Returns:
        tuple[pd.DataFrame, dict]: Uma linha por θ; a CRB da imagem direta em θ = 0
        é infinita.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    receptor = construir_receptor(config, psf)
    nome = receptor.kind.value
    cena = TwoPointScene(0.0, 0.0)
    lei_direta = build_pmf(cena, psf, Receiver(ReceiverKind.DIRECT))
    lei = build_pmf(cena, psf, receptor)
    modelo = mixture_model_from_scene(cena, psf)

    linhas = []
    inicio = time.time()
    for i, t in enumerate(config.grid):
        theta = t / dk
        fi_direta = fisher_scalar(lei_direta, theta)
        fi_receptor = fi_direta if nome == "direct" else fisher_scalar(lei, theta)
        qfi = qfi_from_fidelity(modelo, theta)
        linhas.append({
            "theta": theta,
            "theta_dk": t,
            "fi_direct": fi_direta,
            f"fi_{nome}": fi_receptor,
            "qfi": qfi,
            "N_crb_direct": _crb(fi_direta, dk),
            f"N_crb_{nome}": _crb(fi_receptor, dk),
            "N_qcrb": _crb(qfi, dk),
            "modified_fi_direct": theta ** 2 * fi_direta,
            f"modified_fi_{nome}": theta ** 2 * fi_receptor,
        })
        logger.debug("🔁 bounds %d/%d | θΔk = %.4g", i + 1, len(config.grid), t)
    logger.info("⏱️ bounds: %d pontos em %.2f s.", len(linhas), time.time() - inicio)
    return pd.DataFrame(linhas), {"delta_k": dk}


def _estimador(receptor: Receiver) -> EstimatorSpec:
    if receptor.kind is ReceiverKind.SPADE and receptor.crosstalk is None:
        return EstimatorSpec(EstimatorKind.SPADE_CLOSED_FORM)
    if receptor.kind is ReceiverKind.DIRECT:
        return EstimatorSpec(EstimatorKind.DIRECT_MLE)
    return EstimatorSpec(EstimatorKind.GENERIC_MLE)


def simular_mse(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    MSE empírico do estimador de θ por Monte Carlo, para cada N, com a soma
    de Poisson analítica (SPADE gaussiano alinhado) e as cotas CRB e CRB
    corrigida por viés.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    receptor = construir_receptor(config, psf)
    estimador = _estimador(receptor)
    grade = np.asarray(config.grid) / dk
    cena = TwoPointScene(0.0, float(grade[0]))
    lei = build_pmf(cena, psf, receptor)
    fi = np.array([fisher_scalar(lei, theta) for theta in grade])
    analitico = (estimador.kind is EstimatorKind.SPADE_CLOSED_FORM
                 and psf.kind is PSFKind.GAUSSIAN and receptor.alignment_offset == 0.0)

    tabelas = []
    for j, N in enumerate(config.photons):
        logger.info("🔁 mse-sim N = %d (%d/%d)", N, j + 1, len(config.photons))
        mc = monte_carlo_mse(cena, psf, receptor, estimador, grade, N,
                             int(config.get("trials")), config.seed + j,
                             _modo_orcamento(config), pmf=lei)
        curva = empirical_bias(mc) if len(grade) >= 2 else None
        df = mc_para_df(mc, dk, curva)
        df["N_crb"] = [_crb(I, dk) for I in fi]
        if analitico:
            oraculo = spade_poisson_mse(grade, N, dk)
            df["N_mse_analytic"] = N * oraculo["mse"]
            vies, derivada = oraculo["bias"], oraculo["bias_derivative"]
        elif curva is not None:
            vies, derivada = curva.bias, curva.derivative
        else:
            vies, derivada = mc.bias, np.zeros_like(mc.bias)
        with np.errstate(divide="ignore"):
            df["N_crb_bias_corrected"] = N * np.asarray(
                bias_corrected_crb(vies, derivada, np.where(fi > 0, fi, np.inf), N), dtype=float)
        tabelas.append(df)
    return pd.concat(tabelas, ignore_index=True), {"estimator": estimador.kind.value}


def simular_chernoff(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    Expoentes de Chernoff para uma fonte versus duas fontes separadas por θ:
    imagem direta, SPADE, SLIVER e SPLICE, e o expoente quântico.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    cena = TwoPointScene(0.0, 0.0)
    leis = {nome: build_pmf(cena, psf, construir_receptor(config, psf, nome))
            for nome in RECEPTORES_CHERNOFF}
    modelo = mixture_model_from_scene(cena, psf)

    linhas = []
    for t in config.grid:
        theta = t / dk
        linha = {"theta": theta, "theta_dk": t}
        for nome, lei in leis.items():
            relatorio = chernoff_exponent(lei, None, {"theta": 0.0}, {"theta": theta})
            linha[f"xi_{nome}"] = relatorio.value
        linha["xi_quantum"] = qce(modelo, None, {"theta": 0.0}, {"theta": theta}).value
        linhas.append(linha)
        logger.debug("🔁 chernoff θΔk = %.4g | ξ_SPADE = %.6e", t, linha["xi_spade"])
    return pd.DataFrame(linhas), {}


def simular_discriminacao(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """Taxa de erro empírica do teste uma fonte/duas fontes e expoente ajustado."""
    psf = construir_psf(config)
    dk = psf.delta_k
    receptor = construir_receptor(config, psf)
    lei = build_pmf(TwoPointScene(0.0, 0.0), psf, receptor)

    tabelas = []
    for i, t in enumerate(config.grid):
        theta = t / dk
        par = HypothesisPair(hipotese(lei, theta=0.0), hipotese(lei, theta=theta))
        resultado = simulate_discrimination(par, config.photons, int(config.get("trials")),
                                            config.seed + i, _modo_orcamento(config))
        df = discriminacao_para_df(resultado, receptor.kind.value)
        df.insert(0, "theta_dk", t)
        df.insert(0, "theta", theta)
        df["chernoff_exponent"] = chernoff_exponent(lei, None, {"theta": 0.0},
                                                    {"theta": theta}).value
        tabelas.append(df)
    return pd.concat(tabelas, ignore_index=True), {}


def simular_coerencia(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    Informação de Fisher por fóton emitido de um par parcialmente coerente,
    com SPADE completo e com o modo derivada isolado, e a cota NΔk²{1 − Re[γκ]}.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    receptor = construir_receptor(config, psf)
    if receptor.kind is not ReceiverKind.SPADE:
        raise DomainError("❌ O comando coherence usa o receptor SPADE.")

    linhas = []
    for gamma in config.gammas:
        lei = build_pmf(CoherentPairScene(0.0, 1.0, gamma), psf, receptor)
        derivada = restrict_outcomes(lei, ["1"])
        for t in config.grid:
            theta = t / dk
            linhas.append({
                "gamma_re": gamma.real,
                "gamma_im": gamma.imag,
                "theta": theta,
                "theta_dk": t,
                "fi_spade": fisher_scalar(lei, theta),
                "fi_derivative_mode": fisher_scalar(derivada, theta),
                "qfi_bound": qfi_partial_coherence_bound(gamma, theta, psf, 1.0),
            })
        logger.debug("🔁 coherence γ = %s concluído.", gamma)
    return pd.DataFrame(linhas), {}


def objeto_duas_barras(delta_k: float, pixels: int = 41) -> IntensityGrid:
    """
    Objeto 1D sub-Rayleigh de referência: duas barras de brilhos 1 (x < 0) e
    0,6 (x > 0) em 0,1 ≤ |xΔk| ≤ 0,2, separadas por um vão central. As barras
    ocupam o suporte de largura 0,4/Δk até as bordas, que é o suporte declarado
    por padrão na reconstrução.
    """
    passo = 0.4 / delta_k / (pixels - 1)
    x = (np.arange(pixels) - (pixels - 1) / 2.0) * passo * delta_k
    valores = np.where((x <= -0.1 + 1e-12) & (x >= -0.2 - 1e-12), 1.0, 0.0)
    valores += np.where((x >= 0.1 - 1e-12) & (x <= 0.2 + 1e-12), 0.6, 0.0)
    return IntensityGrid.normalized(valores[None, :], passo)


def _objeto(config: RunConfig, psf: PSF) -> IntensityGrid:
    if config.scene is None:
        return objeto_duas_barras(psf.delta_k)
    if not isinstance(config.scene, IntensityGrid):
        raise DomainError("❌ Os comandos de momentos exigem uma cena do tipo 'grid'.")
    return config.scene


def _momentos_medidos(config: RunConfig, psf: PSF, objeto: IntensityGrid):
    """Registro SPADE e, opcionalmente, registros intercalados (offsets 0 e 1)."""
    dim = 1 if objeto.shape[0] == 1 else 2
    corte = int(config.get("basis_cutoff"))
    N = config.photons[0]
    modo = _modo_orcamento(config)
    lei = spade_pmf(objeto, psf, base_padrao(psf, corte, dim))
    registro = sample_record(lei, None, N, modo, config.seed)
    intercalados = None
    if config.get("interleaved"):
        intercalados = [
            sample_record(interleaved_pmf(objeto, psf, ModeBasis(BasisKind.INTERLEAVED,
                                                                 psf.width_param, corte, dim,
                                                                 interleave_offset=o)),
                          None, N, modo, config.seed + 1 + o)
            for o in (0, 1)
        ]
    return estimate_moments(registro, psf.delta_k, intercalados)


def simular_momentos(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """Momentos estimados de contagens SPADE simuladas, comparados aos exatos."""
    psf = construir_psf(config)
    objeto = _objeto(config, psf)
    ordem = int(config.get("max_order", ORDEM_MOMENTOS))
    estimados = _momentos_medidos(config, psf, objeto).truncated(ordem)
    exatos = moment_set_from_grid(objeto, psf.delta_k, ordem,
                                  odd=bool(config.get("interleaved")))
    return momentos_para_df(estimados, exatos), {"parity": estimados.parity}


def _metodo_e_lambda(config: RunConfig, config_solver: dict) -> tuple[str, object]:
    """Variante da reconstrução e λ (None usa o padrão da variante; "auto", a curva L)."""
    metodo = str(config.get("method"))
    solver = str(config_solver.get("solver_name", SOLVER_PADRAO))
    if metodo == "lp" and not solver_disponivel(solver):
        logger.warning("⚠️ Solver '%s' indisponível; reconstrução pela variante NNLS.", solver)
        metodo = "nnls"
    return metodo, config.get("regularization")


def simular_reconstrucao(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    Reconstrução a partir de momentos simulados, comparada com a imagem
    limitada por difração.

    Returns:
        tuple[pd.DataFrame, dict]: Uma linha por pixel; os extras trazem os erros
        L2, o resíduo, a sinalização de inviabilidade e o resultado (`resultado`).
    """
    psf = construir_psf(config)
    objeto = _objeto(config, psf)
    h, w = objeto.shape
    passo = objeto.pixel_pitch
    suporte = config.get("support")
    if suporte is None:
        suporte = w * passo / 2.0 if h == 1 else (w * passo / 2.0, h * passo / 2.0)
    elif isinstance(suporte, (list, tuple)):
        suporte = tuple(float(s) / psf.delta_k for s in suporte)
    else:
        suporte = float(suporte) / psf.delta_k
    momentos = _momentos_medidos(config, psf, objeto)
    _, config_solver = split_config(dict(config.options))
    metodo, lam = _metodo_e_lambda(config, config_solver)
    resolucao = int(config.get("resolution", w))
    if lam == "auto":
        lam, _, _ = curva_l(momentos, suporte, resolucao, method=metodo,
                            max_order=config.get("max_order"), config_solver=config_solver)
    resultado = reconstruct(momentos, suporte, resolucao,
                            None if lam is None else float(lam), metodo,
                            config.get("max_order"), config_solver)

    base = diffraction_baseline(objeto, psf)
    mesma_grade = resultado.grid.shape == objeto.shape
    erro = reconstruction_error(resultado, objeto) if mesma_grade else float("nan")
    erro_base = float(np.linalg.norm(base / base.sum() - objeto.values))
    X, Y = resultado.grid.coordinates()
    df = pd.DataFrame({
        "x": X.ravel(),
        "y": Y.ravel(),
        "reconstruction": resultado.grid.values.ravel(),
    })
    if mesma_grade:
        df["truth"] = objeto.values.ravel()
        df["baseline"] = (base / base.sum()).ravel()
    logger.info("✅ Reconstrução: erro L2 %.4g (linha de base %.4g).", erro, erro_base)
    return df, {"error_l2": erro, "baseline_error_l2": erro_base, "method": resultado.method,
                "regularization": resultado.regularization,
                "residual": resultado.residual_norm, "infeasible": resultado.infeasible,
                "resultado": resultado}


def simular_adaptativo(config: RunConfig) -> tuple[pd.DataFrame, dict]:
    """
    Protocolo em duas etapas com centroide desconhecido (`--offset` em 1/Δk),
    comparado ao SPADE alinhado e à informação de Fisher do SPADE desalinhado
    estaticamente.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    centroide = float(config.get("offset")) / dk
    split = float(config.get("split"))
    ensaios = int(config.get("trials"))

    linhas = []
    k = 0
    for N in config.photons:
        for t in config.grid:
            theta = t / dk
            cena = TwoPointScene(centroide, theta)
            adaptativo = adaptive_mse(cena, psf, N, split, ensaios, config.seed + k)
            alinhado = adaptive_mse(cena, psf, N, split, ensaios, config.seed + k,
                                    known_centroid=centroide)
            estatico = spade_pmf(cena, psf, alignment_offset=-centroide)
            fi_estatica = fisher_scalar(estatico, theta)
            linhas.append({
                "N": N,
                "theta": theta,
                "theta_dk": t,
                "split": split,
                "theta_mse_adaptive": adaptativo["theta_mse"],
                "theta_mse_adaptive_stderr": adaptativo["theta_mse_stderr"],
                "centroid_mse": adaptativo["centroid_mse"],
                "theta_mse_aligned": alinhado["theta_mse"],
                "theta_mse_aligned_stderr": alinhado["theta_mse_stderr"],
                "fi_static_misaligned": fi_estatica,
                "modified_fi_static": modified_fi_relative(fi_estatica, theta) if theta > 0
                else 0.0,
            })
            k += 1
            logger.debug("🔁 adaptive N = %d θΔk = %.4g", N, t)
    return pd.DataFrame(linhas), {}


def simular_registros(config: RunConfig) -> tuple[list[str], dict]:
    """
    Registros de detecção, um JSON por linha, para cada cena e cada N.

    A cena é a de `--scene` ou, sem ela, um par com θ percorrendo a grade.
    """
    psf = construir_psf(config)
    dk = psf.delta_k
    if config.scene is not None:
        cenas = [config.scene]
    elif config.grid:
        cenas = [TwoPointScene(0.0, t / dk) for t in config.grid]
    else:
        raise DomainError("❌ O comando record exige --scene, --grid ou --theta.")
    receptor = construir_receptor(config, psf)
    linhas = []
    k = 0
    for cena in cenas:
        lei = build_pmf(cena, psf, receptor)
        for N in config.photons:
            registro = sample_record(lei, None, N, _modo_orcamento(config), config.seed + k)
            linhas.append(record_to_json(registro))
            k += 1
    return linhas, {"records": len(linhas)}
