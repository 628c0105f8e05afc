"""Run events recorded by the command line controller."""

from dataclasses import dataclass
from datetime import datetime
from typing import Any, Dict, Optional

RUN_START = "run_start"
SPECTRUM = "spectrum"
ROWS_WRITTEN = "rows_written"
RUN_ERROR = "run_error"
RUN_END = "run_end"


@dataclass
class RunEvent:
    """A single timestamped event of a run, with an optional state summary."""

    event: str
    timestamp: str
    data: Dict[str, Any]
    state: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {"timestamp": self.timestamp, "event": self.event, "data": self.data}
        if self.state:
            result["state"] = self.state
        return result


def create_event(
    event_type: str, data: Dict[str, Any], state: Optional[Dict[str, Any]] = None
) -> RunEvent:
    """Create a run event stamped with the current local time."""
    return RunEvent(event=event_type, timestamp=datetime.now().isoformat(), data=data, state=state)
