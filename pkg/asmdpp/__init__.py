import logging

VERSION = '1.0'
CACHE_ENV_VAR = 'REFINE_CACHE_DIR'
CACHE_FORMAT_VERSION = 1

logger = logging.getLogger(__name__)
logger.setLevel(logging.DEBUG)

from .algebra import Matrix, MPoly, det  # noqa: E402
from .asm import Asm, asm_stats, enumerate_asms, validate_asm  # noqa: E402
from .dpp import Dpp, dpp_stats, enumerate_dpps, validate_dpp  # noqa: E402
from .genfun import GenFun, ObjectKind, genfun_bruteforce  # noqa: E402
from .utils import AsmDppError, Caps, CheckOutcome  # noqa: E402

__all__ = [
    'Asm',
    'AsmDppError',
    'Caps',
    'CheckOutcome',
    'Dpp',
    'GenFun',
    'MPoly',
    'Matrix',
    'ObjectKind',
    'asm_stats',
    'det',
    'dpp_stats',
    'enumerate_asms',
    'enumerate_dpps',
    'genfun_bruteforce',
    'validate_asm',
    'validate_dpp'
]
