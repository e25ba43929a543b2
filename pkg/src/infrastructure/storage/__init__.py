from .artifacts import ArtifactRepository

__all__ = [
    "ArtifactRepository",
]
