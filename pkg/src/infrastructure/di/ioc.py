from dishka import Container, make_container

from src.core.config import AppConfig

from .providers import get_providers


def create_container(config: AppConfig) -> Container:
    context = {
        AppConfig: config,
    }

    container = make_container(*get_providers(), context=context)
    return container
