"""
pdsum - Partitions with designated summands
Exact q-series arithmetic, partition enumeration and bijections for PD(n)

Every generating function is a truncated power series with integer
coefficients; brute-force enumeration is the independent oracle.
"""

__version__ = "1.0.0"
__app_name__ = "pdsum"

from pdsum.series import Series, EtaFactor, EtaQuotientSpec, pochhammer, eta_quotient, dissect, inflate
from pdsum.partitions import Partition, DesignatedPartition, pd_count, pd_pair_count

__all__ = [
    "__version__",
    "__app_name__",
    "Series",
    "EtaFactor",
    "EtaQuotientSpec",
    "pochhammer",
    "eta_quotient",
    "dissect",
    "inflate",
    "Partition",
    "DesignatedPartition",
    "pd_count",
    "pd_pair_count",
]
