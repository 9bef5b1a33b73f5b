import hashlib
import json
from collections.abc import Mapping
from typing import Any

import pydantic

from matchgap.constants import ENV_CENSUS_LIMIT, ENV_ORACLE_LIMIT, ENV_PRUNE_DEPTH
from matchgap.exceptions import InvalidParameterError
from matchgap.models import OracleSettings


def get_oracle_settings(
    environ: Mapping[str, str],
    oracle_limit: int | None = None,
    census_limit: int | None = None,
) -> OracleSettings:
    """Defaults, overridden by the environment, overridden by explicit limits."""
    values = {}
    for field, name in (
        ("oracle_limit", ENV_ORACLE_LIMIT),
        ("census_limit", ENV_CENSUS_LIMIT),
        ("prune_depth", ENV_PRUNE_DEPTH),
    ):
        raw = environ.get(name)
        if raw is None or not raw.strip():
            continue
        try:
            values[field] = int(raw)
        except ValueError:
            raise InvalidParameterError(f"{name} must be an integer, got {raw!r}") from None
    if oracle_limit is not None:
        values["oracle_limit"] = oracle_limit
    if census_limit is not None:
        values["census_limit"] = census_limit

    try:
        return OracleSettings(**values)
    except pydantic.ValidationError as e:
        raise InvalidParameterError(str(e)) from None


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def dump_json(payload: pydantic.BaseModel | Mapping[str, Any]) -> str:
    if isinstance(payload, pydantic.BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, indent=2)
