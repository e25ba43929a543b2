from .calibration import CalibrationService
from .ingest import IngestService
from .order_flow import OrderFlowService
from .simulation import SimulationService
from .surface import SurfaceService

__all__ = [
    "CalibrationService",
    "IngestService",
    "OrderFlowService",
    "SimulationService",
    "SurfaceService",
]
