# utils/logging_setup.py
from __future__ import annotations
import os, sys, logging
from logging.handlers import RotatingFileHandler

FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"

def setup_logging(app_logger: logging.Logger | None = None,
                  file_path: str = "/tmp/equidist.log",
                  max_bytes: int = 5_000_000,
                  backups: int = 3,
                  level: int | str = logging.INFO) -> None:
    """
    stderr logs plus a rotating file (stdout is reserved for reports).
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO
    logger = app_logger or logging.getLogger()
    logger.setLevel(level)
    fmt = logging.Formatter(FORMAT)
    if not any(getattr(h, "_equidist", False) for h in logger.handlers):
        sh = logging.StreamHandler(sys.stderr)
        sh.setLevel(max(level, logging.WARNING))
        sh.setFormatter(fmt)
        sh._equidist = True  # type: ignore[attr-defined]
        logger.addHandler(sh)
        try:
            os.makedirs(os.path.dirname(file_path) or ".", exist_ok=True)
            fh = RotatingFileHandler(file_path, maxBytes=max_bytes, backupCount=backups)
            fh.setLevel(level)
            fh.setFormatter(fmt)
            fh._equidist = True  # type: ignore[attr-defined]
            logger.addHandler(fh)
        except Exception:
            pass  # stderr only
