"""Exact verification and constructions for finite-dimensional BiHom superalgebras."""

from .errors import BiHomError
from .exact import Q
from .graded import Action, BilinearOp, EvenMap, SuperSpace
from .operators import OperatorSpec, check_o_operator, check_operator, check_rota_baxter
from .report import Report
from .representations import Bimodule, check_bimodule, check_module_k_superalgebra, regular_bimodule
from .varieties import (ASSOCIATIVE, LDENDRIFORM, LIE, LIE_ADMISSIBLE, PRELIE, Structure,
                        check_variety)

__version__ = "0.1.0"
