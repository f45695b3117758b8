"""All-pairs evaluation of a registered measure, serial or process-parallel."""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor

from . import registry
from .errors import MeasureError, PairError


def _row(args) -> list[float]:
    measure_id, rows, i, options = args
    desc = registry.get(measure_id)
    opts = {**desc.defaults, **options}
    out = []
    for j, other in enumerate(rows):
        try:
            out.append(registry.scalar_of(desc, desc.fn(rows[i], other, **opts)))
        except MeasureError as exc:
            raise PairError(i, j, exc) from exc
    return out


def pairwise(measure_id: str, rows, options: dict | None = None,
             parallel: bool = False, workers: int | None = None) -> list[list[float]]:
    """Full ``n x n`` matrix of ``measure(rows[i], rows[j])`` in input order.

    Cells hold the distance, or the similarity for similarity-only measures;
    NO_CONVERSION becomes ``inf``. With ``parallel`` rows are farmed out to
    worker processes and merged by index, so the result does not depend on
    scheduling. The first failing cell (row-major) raises :class:`PairError`.
    """
    registry.get(measure_id)
    rows = list(rows)
    jobs = [(measure_id, rows, i, dict(options or {})) for i in range(len(rows))]
    if not parallel or len(rows) < 2:
        return [_row(job) for job in jobs]
    workers = workers or min(len(rows), os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_row, job) for job in jobs]
        # collect in row order so the reported error is the row-major first one
        return [f.result() for f in futures]


def format_cell(value: float, precision: int | None = None) -> str:
    """``repr`` round-trip formatting, or ``precision`` significant digits."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if precision is None:
        return repr(float(value))
    return f"{value:.{precision}g}"


def to_csv(matrix: list[list[float]], precision: int | None = None) -> str:
    return "".join(",".join(format_cell(v, precision) for v in row) + "\n" for row in matrix)
