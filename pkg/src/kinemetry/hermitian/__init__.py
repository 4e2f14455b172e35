"""Exact algebra of unitary valuations, area measures and their kinematic tensors."""

from .calibration import (
    builtin_kchi_n1,
    calibrate_n1,
    calibrated_AS_n1,
    classical_coefficients,
    classical_target,
    evaluate_classical,
)
from .checks import SymmetryReport, check_noNN, check_symmetric, nn_terms
from .elements import AreaElement, KinTensor, ValElement
from .indices import AreaIndex, ValIndex, area_indices, valid_area, valid_n, valid_val, val_indices
from .maps import (
    b_symbol,
    c_coeff,
    check_degree_paired,
    compute_AS,
    delta_A,
    delta_B,
    delta_N,
    ell_B,
    from_B_basis,
    g_lambda,
    glob_area,
    identity,
    omega,
    to_B_basis,
)
from .ring import LambdaPiPoly, PiPoly
from .tensor_io import dumps_tensor, load_kchi, load_tensor, save_tensor, tensor_from_dict, tensor_to_dict

__all__ = [
    "AreaElement", "AreaIndex", "KinTensor", "LambdaPiPoly", "PiPoly", "SymmetryReport", "ValElement",
    "ValIndex", "area_indices", "b_symbol", "builtin_kchi_n1", "c_coeff", "calibrate_n1",
    "calibrated_AS_n1", "check_degree_paired", "check_noNN", "check_symmetric", "classical_coefficients",
    "classical_target", "compute_AS", "delta_A", "delta_B", "delta_N", "dumps_tensor", "ell_B",
    "evaluate_classical", "from_B_basis", "g_lambda", "glob_area", "identity", "load_kchi", "load_tensor",
    "nn_terms", "omega", "save_tensor", "tensor_from_dict", "tensor_to_dict", "to_B_basis", "valid_area",
    "valid_n", "valid_val", "val_indices",
]
