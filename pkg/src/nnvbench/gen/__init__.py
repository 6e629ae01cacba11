from nnvbench.gen.units_math import gen_math_suite
from nnvbench.gen.units_activations import gen_activation_suite
from nnvbench.gen.units_layers import gen_layer_suite
from nnvbench.gen.cnf import CnfFormula, gen_cnf_sat, gen_cnf_unsat
from nnvbench.gen.satnet import encode_sat_network, gen_sat_suite
from nnvbench.gen.hopfield import HopfieldSpec, gen_hopfield, gen_hopfield_suite
from nnvbench.gen.poly import PolySpec, gen_poly_suite, poly_thresholds, train_poly_mlp
from nnvbench.gen.lipschitz import LipschitzSpec, build_sll_network, gen_lipschitz_suite
from nnvbench.gen.vnn_import import import_vnn_assets

__all__ = [
    "gen_math_suite", "gen_activation_suite", "gen_layer_suite",
    "CnfFormula", "gen_cnf_sat", "gen_cnf_unsat",
    "encode_sat_network", "gen_sat_suite",
    "HopfieldSpec", "gen_hopfield", "gen_hopfield_suite",
    "PolySpec", "gen_poly_suite", "poly_thresholds", "train_poly_mlp",
    "LipschitzSpec", "build_sll_network", "gen_lipschitz_suite",
    "import_vnn_assets",
]
