"""Run event logging for specpol."""

from .events import RunEvent, create_event
from .logger import RunLogger
from .serializers import serialize_moments, serialize_spectrum

__all__ = ["RunEvent", "RunLogger", "create_event", "serialize_moments", "serialize_spectrum"]
