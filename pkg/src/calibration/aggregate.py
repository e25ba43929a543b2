from typing import Sequence

from src.analysis import confidence_interval
from src.core.constants import CONFIDENCE_LEVEL
from src.models import CalibrationExperiment, ParameterInterval


def aggregate_experiments(
    experiments: Sequence[CalibrationExperiment],
    level: float = CONFIDENCE_LEVEL,
) -> list[ParameterInterval]:
    if len(experiments) < 2:
        raise ValueError("Aggregation needs at least two experiments")

    first = experiments[0]
    for experiment in experiments[1:]:
        if experiment.method != first.method:
            raise ValueError("Experiments mix calibration methods")
        if experiment.free_parameters != first.free_parameters:
            raise ValueError("Experiments calibrate different parameters")

    return [
        ParameterInterval(
            parameter=parameter,
            interval=confidence_interval(
                [experiment.final_params[parameter.value] for experiment in experiments],
                level,
            ),
        )
        for parameter in first.free_parameters
    ]
