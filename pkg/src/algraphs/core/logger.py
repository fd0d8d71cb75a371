# ==============================================================================
# logger.py — Package logger
# ==============================================================================

import logging

__all__ = ["logger"]

logger = logging.getLogger("algraphs")
