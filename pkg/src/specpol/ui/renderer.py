"""Rich summaries of command results."""

from typing import Optional, Sequence

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from ..errors import Diagnostic
from .theme import SummaryTheme

MAX_SUMMARY_ROWS = 25


class ResultRenderer:
    """Prints result tables and errors on stderr, leaving stdout to the data."""

    def __init__(self, console: Optional[Console] = None):
        self.theme = SummaryTheme
        self.console = console or Console(stderr=True, theme=self.theme.get_rich_theme())

    def show_header(self, command: str, label: str, n_list: Sequence[int]) -> None:
        self.console.print(
            f"[title]specpol {command}[/title] [muted]|[/muted] {label} "
            f"[muted]n =[/muted] {', '.join(map(str, n_list))}"
        )

    def render_table(
        self,
        title: str,
        columns: Sequence[str],
        rows: Sequence[Sequence[str]],
        max_rows: int = MAX_SUMMARY_ROWS,
    ) -> None:
        """
        Render pre-formatted rows.

        Args:
            title: Table title
            columns: Column names
            rows: Rows of already formatted cells
            max_rows: Rows beyond this count are summarised in the caption
        """
        caption, min_width = None, None
        if len(rows) > max_rows:
            caption = f"{len(rows) - max_rows} more rows not shown"
            # captions wrap to the table width
            min_width = len(caption) + 4

        table = Table(
            title=f"[title]{title}[/title]",
            caption=caption,
            min_width=min_width,
            box=box.ROUNDED,
            border_style="border",
            header_style="header",
        )
        for column in columns:
            table.add_column(column, justify="right", style=self.theme.get_column_style(column))
        for row in rows[:max_rows]:
            table.add_row(*row)
        self.console.print(table)

    def show_message(self, message: str, style: str = "info") -> None:
        self.console.print(f"[{style}]{escape(message)}[/{style}]")

    def show_error(self, message: str, diagnostics: Sequence[Diagnostic] = ()) -> None:
        """Show an error with one line per diagnostic."""
        body = escape(message)
        if diagnostics:
            body += "\n" + "\n".join(f"  - {escape(str(d))}" for d in diagnostics)
        self.console.print(
            Panel(body, title="[warning]Error[/warning]", border_style="warning", expand=False)
        )
