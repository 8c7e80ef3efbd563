"""
Pacote `models`

Tipos de domínio imutáveis do `subrayleigh`: PSF, bases modais, cenas,
receptores, leis de resultados, registros de detecção e relatórios.

Autor: Giovani Santiago Junqueira
"""

__author__ = "Giovani Santiago Junqueira"

from .psf import PSF, PSFKind
from .mode_basis import BasisKind, ModeBasis, OverlapTable
from .scene import (CoherentPairScene, Constellation, FieldGrid, IntensityGrid, Scene,
                    TwoPointScene)
from .receiver import Receiver, ReceiverKind, validar_estocastica
from .outcome import BudgetMode, DetectionRecord, OutcomePMF, Support
from .fisher import BoundReport, FisherMatrix
from .quantum_state import Normalization, QuantumStateModel, StateRepresentation
from .hypothesis import (DiscriminationResult, ExoplanetEntropies, ExponentReport,
                         HypothesisPair)
from .estimation import (AdaptiveResult, BiasCurve, EstimatorKind, EstimatorSpec, MCResult,
                         MLEResult)
from .moments import EVEN_ONLY, INTERLEAVED, MomentSet, ReconstructionResult

__all__ = [
    "PSF", "PSFKind", "BasisKind", "ModeBasis", "OverlapTable",
    "CoherentPairScene", "Constellation", "FieldGrid", "IntensityGrid", "Scene", "TwoPointScene",
    "Receiver", "ReceiverKind", "validar_estocastica",
    "BudgetMode", "DetectionRecord", "OutcomePMF", "Support",
    "BoundReport", "FisherMatrix",
    "Normalization", "QuantumStateModel", "StateRepresentation",
    "DiscriminationResult", "ExoplanetEntropies", "ExponentReport", "HypothesisPair",
    "AdaptiveResult", "BiasCurve", "EstimatorKind", "EstimatorSpec", "MCResult", "MLEResult",
    "EVEN_ONLY", "INTERLEAVED", "MomentSet", "ReconstructionResult",
]
