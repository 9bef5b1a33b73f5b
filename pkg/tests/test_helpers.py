import json

import pytest

from matchgap.constants import (
    DEFAULT_CENSUS_LIMIT,
    DEFAULT_ORACLE_LIMIT,
    DEFAULT_PRUNE_DEPTH,
    ENV_CENSUS_LIMIT,
    ENV_ORACLE_LIMIT,
    ENV_PRUNE_DEPTH,
)
from matchgap.exceptions import InvalidParameterError
from matchgap.helpers import dump_json, get_oracle_settings, input_digest
from matchgap.models import Matching


def test_settings_defaults():
    settings = get_oracle_settings({})
    assert settings.oracle_limit == DEFAULT_ORACLE_LIMIT
    assert settings.census_limit == DEFAULT_CENSUS_LIMIT
    assert settings.prune_depth == DEFAULT_PRUNE_DEPTH


def test_settings_from_environment():
    settings = get_oracle_settings(
        {ENV_ORACLE_LIMIT: "12", ENV_CENSUS_LIMIT: "48", ENV_PRUNE_DEPTH: " 2 "}
    )
    assert (settings.oracle_limit, settings.census_limit, settings.prune_depth) == (12, 48, 2)


def test_settings_explicit_limit_wins():
    assert get_oracle_settings({ENV_ORACLE_LIMIT: "12"}, oracle_limit=25).oracle_limit == 25


def test_settings_ignore_blank_values():
    assert get_oracle_settings({ENV_ORACLE_LIMIT: ""}).oracle_limit == DEFAULT_ORACLE_LIMIT


@pytest.mark.parametrize(
    "environ, limit",
    [
        ({ENV_ORACLE_LIMIT: "many"}, None),
        ({ENV_PRUNE_DEPTH: "-1"}, None),
        ({}, -3),
    ],
)
def test_settings_reject(environ: dict, limit: int | None):
    with pytest.raises(InvalidParameterError):
        get_oracle_settings(environ, limit)


def test_input_digest():
    assert input_digest(b"") == (
        "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    )


def test_dump_json():
    assert dump_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'
    assert json.loads(dump_json(Matching(edges=((0, 1),)))) == {"edges": [[0, 1]]}


def test_settings_explicit_census_limit():
    settings = get_oracle_settings({ENV_CENSUS_LIMIT: "30"}, census_limit=40)
    assert (settings.oracle_limit, settings.census_limit) == (DEFAULT_ORACLE_LIMIT, 40)
