# Services Package

from .audit_service import AuditService
from .expansion_service import ExpansionService
from .general_kernel_service import GeneralKernelService
from .instance_service import InstanceService
from .matching_service import MatchingService
from .oracle_service import OracleService
from .path_service import PathService
from .small_kernel_service import SmallKernelService

__all__ = [
    'AuditService',
    'ExpansionService',
    'GeneralKernelService',
    'InstanceService',
    'MatchingService',
    'OracleService',
    'PathService',
    'SmallKernelService',
]
