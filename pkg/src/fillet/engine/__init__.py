"""Constructive steps: realizations, ladders, versatile copies and filletings."""
from ._common import (
    Constants, FocusBreak, StepFailure, VersatileCertificate, ViolationFound,
    m_sequence,
)
from .driver import Filleting, extract_paths, find_filleting, find_versatile
from .focus import FocusSupport, mass_blocks, versatile_via_focus
from .ladder import (
    Columns, Ladder, LadderSupport, build_columns, build_ladder, link_pairing,
    versatile_via_ladder,
)
from .realization import (
    Realization, find_connected_heavy, find_realization, focus_ball,
)

__all__ = [
    "Columns", "Constants", "Filleting", "FocusBreak", "FocusSupport", "Ladder",
    "LadderSupport", "Realization", "StepFailure", "VersatileCertificate",
    "ViolationFound", "build_columns", "build_ladder", "extract_paths",
    "find_connected_heavy", "find_filleting", "find_realization", "find_versatile",
    "focus_ball", "link_pairing", "m_sequence", "mass_blocks", "versatile_via_focus",
    "versatile_via_ladder",
]
