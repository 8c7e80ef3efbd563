"""
Pacote `information`

Informação de Fisher clássica e quântica e as cotas derivadas delas.

Módulos incluídos:
- `fisher`: informação clássica por diferenças centrais com Richardson
- `quantum`: modelos de estado, fidelidade, QFI e cota de coerência parcial
- `bounds`: CRB corrigida por viés, van Trees e `BoundReport`

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .fisher import (fisher_matrix, fisher_scalar, leading_order_coefficient,
                     malha_densidade, modified_fi_relative)
from .quantum import (coherent_model, exoplanet_model, fidelity, kappa, localization_model,
                      mixture_model_from_scene, qcrb_3d, qfi_from_fidelity,
                      qfi_partial_coherence_bound)
from .bounds import (bias_corrected_crb, build_bound_report, gaussian_prior_information,
                     van_trees_bound)

__all__ = [
    "fisher_matrix", "fisher_scalar", "leading_order_coefficient", "malha_densidade",
    "modified_fi_relative",
    "coherent_model", "exoplanet_model", "fidelity", "kappa", "localization_model",
    "mixture_model_from_scene", "qcrb_3d", "qfi_from_fidelity", "qfi_partial_coherence_bound",
    "bias_corrected_crb", "build_bound_report", "gaussian_prior_information", "van_trees_bound",
]
