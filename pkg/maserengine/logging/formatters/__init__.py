"""Custom log formatters for maserengine."""

import logging
from datetime import datetime
from typing import Optional

class MaserFormatter(logging.Formatter):
    """Custom formatter for maserengine logs.

    Format example:
    2026-01-12 00:01:47 [INFO] [core.dynamics.integrator] Integrating to t=100 with dt=0.005
    2026-01-12 00:01:48 [DEBUG] [core.dynamics.integrator] [t=0.25] trace_err=1.2e-15 ...
    """

    FULL_FORMAT = "%(asctime)s [%(levelname)s] [%(name)s] %(message)s"

    def __init__(self, compact: bool = False):
        """Initialize the formatter.

        Args:
            compact: Emit only the message, for handlers that render time and level themselves
        """
        super().__init__(
            fmt="%(message)s" if compact else self.FULL_FORMAT,
            datefmt="%Y-%m-%d %H:%M:%S"
        )

    def formatTime(self, record: logging.LogRecord, datefmt: Optional[str] = None) -> str:
        """Format the timestamp in local time."""
        ct = datetime.fromtimestamp(record.created)
        return ct.strftime(datefmt if datefmt is not None else "%Y-%m-%d %H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record.

        Prefixes the simulation time when the record carries extra={"sim_time": t}.
        """
        record_dict = record.__dict__.copy()

        sim_time = record_dict.get("sim_time")
        if sim_time is not None:
            record_dict["msg"] = f"[t={sim_time:g}] {record.getMessage()}"
            record_dict["args"] = None

        modified_record = logging.makeLogRecord(record_dict)
        return super().format(modified_record)
