import logging
import os
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def default_workers():
    return os.cpu_count() or 1


def partition(total, parts):
    """Split range(total) into at most `parts` contiguous (start, stop) chunks of near-equal size."""
    parts = max(1, min(int(parts), int(total))) if total else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def map_ranges(func, total, workers=None):
    """Run func(start, stop) over a partition of range(total) and return the results in range order.

    numpy releases the GIL inside the vectorised kernels, so a thread pool is
    enough; with one worker everything runs inline.
    """
    workers = workers or default_workers()
    chunks = partition(total, workers)
    if len(chunks) <= 1:
        return [func(start, stop) for start, stop in chunks]

    logger.debug("Dispatching %d chunks of range(%d) to %d workers", len(chunks), total, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, start, stop) for start, stop in chunks]
        return [f.result() for f in futures]

