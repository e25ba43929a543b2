from typing import Any

import msgspec


class RunManifest(msgspec.Struct, frozen=True):
    command: str
    config: dict[str, Any]
    seeds: list[int]
    version: str
    started_at: str
    finished_at: str
    outputs: list[str]
