from dishka import Provider

from .infrastructure import InfrastructureProvider
from .services import ServicesProvider


def get_providers() -> list[Provider]:
    return [
        InfrastructureProvider(),
        ServicesProvider(),
    ]
