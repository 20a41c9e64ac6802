"""
Structured Logging Configuration

Provides logging for long-running algebra jobs with:
- JSON formatting
- Log levels
- Contextual information (code label, enumeration level, bounds)
- Performance tracking
"""
import logging
import json
import sys
from datetime import datetime, timezone

# Extra attributes copied into the JSON document when present on a record
_EXTRA_FIELDS = (
    "code_label",
    "command",
    "duration_ms",
    "work",
    "level",
    "stage",
    "lower",
    "upper",
)


class JSONFormatter(logging.Formatter):
    """
    Format logs as JSON for easy parsing and analysis.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno
        }

        for name in _EXTRA_FIELDS:
            if hasattr(record, name):
                # "level" would clash with the record level name
                key = "enumeration_level" if name == "level" else name
                log_data[key] = getattr(record, name)

        # Add exception info if present
        if record.exc_info:
            log_data['exception'] = self.formatException(record.exc_info)

        return json.dumps(log_data)


def setup_logging(level: str = "INFO", json_format: bool = True, log_file: str = ""):
    """
    Configure application logging.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_format: If True, use JSON formatter; else use standard format
        log_file: Optional file path receiving the same records

    Reports go to stdout, so log records are written to stderr.
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper()))

    # Remove existing handlers
    root.handlers.clear()

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    if json_format:
        formatter = JSONFormatter()
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)

    return root


# Create logger instance
logger = logging.getLogger("double_skew")


def log_performance(operation: str, duration_ms: float, **kwargs):
    """Log performance metrics"""
    logger.info(
        f"Performance: {operation}",
        extra={"duration_ms": round(duration_ms, 3), **kwargs}
    )


def log_distance_progress(label: str, level: int, lower: int, upper, work: int, stage: str = "codewords"):
    """Log the bounds reached after one enumeration or parity-column level"""
    logger.info(
        f"Distance {stage} level {level} done for {label}: {lower} <= d <= {upper}",
        extra={"code_label": label, "level": level, "stage": stage, "lower": lower,
               "upper": upper, "work": work}
    )


def log_error(message: str, error: Exception, **kwargs):
    """Log errors with context"""
    logger.error(message, exc_info=error, extra=kwargs)
