import json
import os
import sys
from datetime import datetime, timezone

LEVELS = {"debug": 10, "info": 20, "warning": 30, "error": 40}


def _get_level() -> int:
    return LEVELS.get((os.getenv("LRPOLES_LOG") or "warning").lower(), LEVELS["warning"])


def log(level, **fields):
    """One JSON object per line on stderr; stdout carries results only."""
    if LEVELS.get(level, LEVELS["error"]) < _get_level():
        return
    print(json.dumps({
        "source": "lrpoles", "level": level,
        "at": datetime.now(timezone.utc).isoformat(),
        **fields,
    }, default=str), file=sys.stderr, flush=True)
