"""Matrix models of small real forms used as numerical ground truth."""

from .algebras import MatrixLieAlgebra, SUPPORTED, UnsupportedForm, build_algebra
from .cases import CASES, DEFAULT_SEED, verify_all, verify_case, verify_reduction
from .checks import GradedRealization, OracleError, flow_to_top, graded_action_check, projective_stab_dim
from .linalg import ANGLE_TOL, EIG_CLUSTER_TOL, RANK_RTOL, RESIDUAL_ATOL, joint_kernel
from .modules import MatrixModule, ModuleError, functor
