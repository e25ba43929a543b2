from typing import Any, Callable, Final

import numpy as np
from msgspec.json import Decoder, Encoder


def enc_hook(obj: Any) -> Any:
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    raise NotImplementedError(f"Objects of type '{type(obj).__name__}' are not supported")


decode: Final[Callable[..., Any]] = Decoder[dict[str, Any]]().decode
bytes_encode: Final[Callable[..., bytes]] = Encoder(enc_hook=enc_hook, order="deterministic").encode


def encode(obj: Any) -> str:
    data: bytes = bytes_encode(obj)
    return data.decode()
