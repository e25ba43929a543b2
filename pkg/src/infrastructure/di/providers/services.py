from dishka import Provider, Scope, provide

from src.services.calibration import CalibrationService
from src.services.ingest import IngestService
from src.services.order_flow import OrderFlowService
from src.services.simulation import SimulationService
from src.services.surface import SurfaceService


class ServicesProvider(Provider):
    scope = Scope.APP

    calibration_service = provide(source=CalibrationService)
    ingest_service = provide(source=IngestService)
    order_flow_service = provide(source=OrderFlowService)
    simulation_service = provide(source=SimulationService)
    surface_service = provide(source=SurfaceService)
