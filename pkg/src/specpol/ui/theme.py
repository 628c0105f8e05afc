"""Terminal theme for specpol summaries."""

from rich.style import Style
from rich.theme import Theme


class SummaryTheme:
    """Colours for result tables and diagnostics printed to stderr."""

    COLORS = {
        "primary_blue": "#3B82F6",
        "danger_red": "#EF4444",
        "success_green": "#10B981",
        "warning_amber": "#F59E0B",
        "cyan": "#06B6D4",
        "slate": "#64748B",
        "gray": "#94A3B8",
    }

    @classmethod
    def get_rich_theme(cls) -> Theme:
        return Theme(
            {
                "title": Style(color=cls.COLORS["primary_blue"], bold=True),
                "header": Style(color=cls.COLORS["slate"], bold=True),
                "border": Style(color=cls.COLORS["slate"]),
                "value": Style(color=cls.COLORS["cyan"]),
                "key": Style(color=cls.COLORS["warning_amber"], bold=True),
                "warning": Style(color=cls.COLORS["danger_red"], bold=True),
                "success": Style(color=cls.COLORS["success_green"], bold=True),
                "info": Style(color=cls.COLORS["cyan"]),
                "muted": Style(color=cls.COLORS["gray"]),
            }
        )

    @classmethod
    def get_column_style(cls, column: str) -> str:
        """Highlight the identifying columns of a result table."""
        if column in ("n", "lambda"):
            return "key"
        if column in ("polluting", "spurious"):
            return "warning"
        return "value"
