"""Exact normalization and conductor computations for monomial semigroup rings."""

from .conductor import (ConductorResult, conductor_element, conductor_generators, in_conductor,
                        numerical_conductor)
from .config import DEFAULT_LIMITS, Limits
from .errors import (BoundExceeded, DimensionMismatch, InvalidSemigroup, NotASystemOfParameters,
                     NotPointed, UncertifiedResult)
from .ideals import (MonomialIdeal, ideal_contains, ideal_subset, ideal_sum, is_m_primary,
                     is_system_of_parameters, maximal_ideal, radical_exponents)
from .ikeda import (IkedaCertificate, Verdict, check_sop_containment, excess_decomposition,
                    oneless_witness, principal_containments, sop_containments,
                    universal_certificate, verify_multiplication_table)
from .lattice import (IntegerLattice, RationalCone, cone_contains, cone_from_generators,
                      hermite_normal_form, lattice_contains, zonotope_lattice_points)
from .normalization import (SaturationResult, gaps_bounded, in_saturation, is_normal,
                            module_generators, normalize, quotient_length, saturate)
from .predicates import (PinchedVeroneseSpec, Seminormality, is_gorenstein_numerical,
                         is_seminormal, pinched_veronese)
from .semigroup import (AffineSemigroup, NumericalSemigroup, all_factorizations, apery_set,
                        contains, dimension, embedding_dimension, factorization, frobenius, gaps,
                        genus, is_symmetric, minimal_generators)

__version__ = "0.1.0"
