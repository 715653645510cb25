from enum import Enum

__all__ = ["Architecture", "PerfCurve"]


class Architecture(Enum):
    """Hardware classes compared by the cost model and the advisor"""
    FullTTD_NBBG = "FullTTD_NBBG"
    NonTTD_NBBG = "NonTTD_NBBG"
    NonTTD_WBBG = "NonTTD_WBBG"
    SparseTTD_NBBG = "SparseTTD_NBBG"

    @property
    def uses_ttd(self) -> bool:
        return self in (Architecture.FullTTD_NBBG, Architecture.SparseTTD_NBBG)

    @property
    def uses_ps(self) -> bool:
        return self is not Architecture.FullTTD_NBBG


class PerfCurve(Enum):
    """
    Labels of the spectral efficiency curves. The declaration order is the order in which rows
    are written to sweep tables.
    """
    FullTTD_NBBG = "FullTTD_NBBG"
    NonTTD_NBBG = "NonTTD_NBBG"
    NonTTD_WBBG = "NonTTD_WBBG"
    SparseTTD_lower = "SparseTTD_lower"
    SparseTTD_upper = "SparseTTD_upper"

    @property
    def rank(self) -> int:
        return list(PerfCurve).index(self)
