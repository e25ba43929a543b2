import math
import warnings
from typing import Callable, Union

import numpy as np
from scipy.spatial.distance import pdist
from scipy.stats import qmc

from src.core.utils.types import FloatArray
from src.models import ObjectiveResult, SurfaceRow, SurfaceStatistics, SurfaceTable

from .space import Mapper, ParameterSpace, serial_map

BOTTOM_FRACTION = 0.1

SurfaceObjective = Callable[[FloatArray], Union[ObjectiveResult, float]]


def sobol_2d(n: int) -> FloatArray:
    """First ``n`` points of the unscrambled 2-D Sobol sequence, origin excluded."""
    if n < 1:
        raise ValueError(f"Point count '{n}' must be positive")

    sampler = qmc.Sobol(d=2, scramble=False)
    sampler.fast_forward(1)

    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message="The balance properties")
        points: FloatArray = sampler.random(n)

    return points


def surface_scan(
    objective: SurfaceObjective,
    space: ParameterSpace,
    n: int,
    *,
    mapper: Mapper = serial_map,
) -> SurfaceTable:
    if space.dimension != 2:
        raise ValueError(f"Surface scans need a parameter pair, got '{space.dimension}'")

    points = space.from_unit(sobol_2d(n))
    results = mapper(objective, list(points))

    rows = []
    for (x, y), result in zip(points, results):
        if isinstance(result, ObjectiveResult):
            value, penalized = result.value, result.penalized
        else:
            value, penalized = float(result), False
        rows.append(SurfaceRow(x=float(x), y=float(y), objective=value, penalized=penalized))

    first, second = space.parameters
    return SurfaceTable(pair=(first, second), rows=rows)


def surface_statistics(table: SurfaceTable, space: ParameterSpace) -> SurfaceStatistics:
    """Flatness (IQR over median) and bottom-decile clustering of a scanned surface.

    Penalized rows are excluded. The cluster ratio compares the mean pairwise distance
    of the lowest-decile points with that of all points, in unit-box coordinates.
    """
    keep = np.array([not row.penalized for row in table.rows], dtype=bool)
    values = table.objectives[keep]
    points = space.to_unit(table.points[keep])

    if values.size < 2:
        raise ValueError("Surface statistics need at least two unpenalized points")

    q25, median, q75 = np.percentile(values, [25, 50, 75])
    flatness = float((q75 - q25) / median) if median > 0 else math.inf

    bottom = max(2, math.ceil(BOTTOM_FRACTION * values.size))
    lowest = points[np.argsort(values, kind="stable")[:bottom]]
    overall = float(np.mean(pdist(points)))
    cluster_ratio = float(np.mean(pdist(lowest)) / overall) if overall > 0 else 1.0

    best = int(np.argmin(values))
    argmin = table.points[keep][best]

    return SurfaceStatistics(
        flatness=flatness,
        cluster_ratio=cluster_ratio,
        argmin=(float(argmin[0]), float(argmin[1])),
        minimum=float(values[best]),
        penalized=int(np.count_nonzero(~keep)),
    )
