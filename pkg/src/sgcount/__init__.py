"""Sequence-counting model of two rotated Stern-Gerlach detectors."""

from .beamsplitter import PhotonQuery, bmap_from_tau, probability_bs, qm_reference_bs, tau_from_bmap
from .exactmath import factorial, multinomial, perm_ratio
from .sgmodel import ModelQuery, ProbabilityTable, big_upsilon, epsilon_cardinality, probability, upsilon
from .statespace import Base4Counts, Base8Counts, QuantumConfig, base8_from_quantum, marginals, quantum_from_base8
from .wignerqm import WignerQuery, wigner_d_squared

__all__ = [
    "Base4Counts",
    "Base8Counts",
    "ModelQuery",
    "PhotonQuery",
    "ProbabilityTable",
    "QuantumConfig",
    "WignerQuery",
    "base8_from_quantum",
    "big_upsilon",
    "bmap_from_tau",
    "epsilon_cardinality",
    "factorial",
    "marginals",
    "multinomial",
    "perm_ratio",
    "probability",
    "probability_bs",
    "qm_reference_bs",
    "quantum_from_base8",
    "tau_from_bmap",
    "upsilon",
    "wigner_d_squared",
]
