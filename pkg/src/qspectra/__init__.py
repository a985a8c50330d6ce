"""Prime and primitive spectra of the quantized algebras K_n.

The package computes, for each admissible set T of the symbols
x_i, y_i, Omega_i, the normal elements N_T, a toral basis of the localized
quotient, the lattice of central Laurent monomials, and the resulting
family of primitive ideals, all under user-declared relations among the
defining scalars.
"""

from .algebra import (
    AlgebraContext,
    Generator,
    NCPoly,
    is_normal,
    multiply,
    omega,
    quotient_reduce,
    scalar_commutes,
    trace_check,
    verify_skew_tower,
)
from .config import Config, ConfigError, parse_config, preset_relations, serialize
from .scalars import ParamGroup, UnitScalar, build_param_group
from .spectra import (
    CenterLattice,
    CommutationMatrix,
    ConstraintError,
    PrimitiveFamily,
    StratumReport,
    ToralBasis,
    center_lattice,
    commutation_matrix,
    full_report,
    primitive_families,
    stratum_report,
    toral_basis,
)
from .strata import (
    AdmissibleSet,
    PSymbol,
    admissible_set,
    enumerate_admissible,
    hspec_poset,
    minimal_generators,
    n_set,
    separation_witness,
)

__all__ = [
    "AdmissibleSet", "AlgebraContext", "CenterLattice", "CommutationMatrix", "Config",
    "ConfigError", "ConstraintError", "Generator", "NCPoly", "PSymbol", "ParamGroup",
    "PrimitiveFamily", "StratumReport", "ToralBasis", "UnitScalar", "admissible_set",
    "build_param_group", "center_lattice", "commutation_matrix", "enumerate_admissible",
    "full_report", "hspec_poset", "is_normal", "minimal_generators", "multiply", "n_set",
    "omega", "parse_config", "preset_relations", "primitive_families", "quotient_reduce",
    "scalar_commutes", "separation_witness", "serialize", "stratum_report", "toral_basis",
    "trace_check", "verify_skew_tower",
]
