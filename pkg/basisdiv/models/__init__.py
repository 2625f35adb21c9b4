from .profile import BasisProfile, basis_profile
from .weak import WeakDivision, check_weak_division
from .semi import SemiDivision, check_semi_division
from .idivision import IDivision, check_i_division
from .oracle import FuzzConfig, all_ideals, exists_semi_division_basis, oracle_is_simple, oracle_is_semisimple, random_algebra
from .decomposition import ALL_BASES, GIVEN_BASIS, connection_levels, decompose, check_semisimple_via_theorem, check_simple_via_corollary, semi_division_basis_from_ideals
from .fuzz import FuzzRunner, run_fuzz
