"""Weyl orbit functions (C, S, E) and their discrete transforms on torus grids."""
from .rootdata import (RootSystem, TorusPoint, UnsupportedType, Weight, center_representatives,
                       format_group, make_root_system, pairing, parse_group, reality_class)
from .weyl import (AffineMap, SignedOrbit, affine_reduce, affine_reduce_map, dominant_rep,
                   even_rep, orbit, reflect_point, simple_reflection, stabilizer_order,
                   torus_orbit_size)
from .grid import (GridSpec, WeightIndexSet, WeightSetError, build_grid, build_weight_set,
                   enumerate_gamma, is_separated, weight_set_from_weights)
from .functions import (NonRegularWeight, eval_C, eval_E, eval_on_grid, eval_S, evaluate,
                        function_matrix)
from .transforms import (DimensionMismatch, SpectralVector, continuous_orthogonality, forward,
                         gram_discrete, gram_full_group, interpolate, inverse, synthesis_matrix)
from .splitting import (CenterCharacterTable, character_table, congruence_class, split_samples,
                        splitting_formula)
from .io import JobConfig
from .verify import run_checks

__version__ = "0.1.0"
