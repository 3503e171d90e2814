"""Orbit-seed spectral codec for finite-field Fourier transforms.

Core objects: a two-level field tower, q-cyclotomic partitions, the
orbit-seed codec for Frobenius-consistent spectra, trace-table transforms,
the class-consistent + residual representation, code analysis, and a
sparse Prony residual backend.
"""

from . import errors
from .analysis import (
    class_covering_radius,
    entropy_bound_check,
    enumerate_code,
    global_covering_radius,
    residual_count,
    symbol_weight,
    tail_bound,
    tail_bound_montecarlo,
    universal_bound_check,
    weight_enumerator,
)
from .cyclotomic import (
    CyclotomicPartition,
    compression_report,
    enumerate_classes,
    exact_length_counts,
    full_length_counts,
    kappa_burnside,
)
from .residual import (
    ResidualPackage,
    anchor_costs_fast,
    anchor_seed,
    best_seed,
    decode_residual,
    encode_residual,
    global_min_support,
    normalize_class,
    recover_seed_majority,
    storage_cost,
)
from .sparse import (
    SparseResidualModel,
    detect_sparsity,
    prony_recover,
    sparse_cost,
    sparse_eval,
)
from .spectral import (
    OrbitSeedVector,
    class_min_poly,
    decode_seeds,
    descent_check_product,
    dft,
    encode_seeds,
    expand_seeds,
    idft,
    is_frobenius_consistent,
    random_orbit_seeds,
)
from .tower import FieldElement, FieldTower, build_tower
from .trace_transform import OpCounter, build_trace_tables, trace_dft

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
