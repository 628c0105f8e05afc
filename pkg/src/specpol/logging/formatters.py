"""Formatters for run events."""

import json

from .events import RunEvent


class JSONFormatter:
    """Format events as JSON lines."""

    def format(self, event: RunEvent) -> str:
        """Format event as single-line JSON."""
        return json.dumps(event.to_dict(), separators=(",", ":"), default=str)


class TextFormatter:
    """Format events as human-readable text."""

    def format(self, event: RunEvent) -> str:
        time = event.timestamp.split("T")[1].split(".")[0]  # HH:MM:SS

        data_parts = []
        for key, value in event.data.items():
            if isinstance(value, list):
                value_str = f"[{', '.join(map(str, value))}]"
            else:
                value_str = str(value)
            data_parts.append(f"{key}={value_str}")
        data_str = ", ".join(data_parts)

        state_str = ""
        if event.state:
            parts = [f"d={event.state.get('d', '?')}", f"n={event.state.get('n', '?')}"]
            extent = event.state.get("extent")
            if extent:
                parts.append(
                    f"re=[{extent['re_min']:.4g}, {extent['re_max']:.4g}], "
                    f"max|im|={extent['im_max']:.4g}"
                )
            state_str = f"\n           State: {', '.join(parts)}"

        return f"[{time}] {event.event.upper()} | {data_str}{state_str}"
