"""Terminal summaries for specpol."""

from .renderer import ResultRenderer
from .theme import SummaryTheme

__all__ = ["ResultRenderer", "SummaryTheme"]
