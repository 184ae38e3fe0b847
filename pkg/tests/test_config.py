import pytest

from cellembed.config import Config
from cellembed.errors import ConfigError
from cellembed.perm import Base


def test_defaults():
    config = Config()
    assert config.base is Base.ONE
    assert (config.interval_max, config.iso_max, config.ideal_max) == (100_000, 2_000, 500_000)
    assert config.output == "text" and not config.stretch


def test_from_env():
    config = Config.from_env({"GUARD_INTERVAL_MAX": "50", "GUARD_ISO_MAX": " ", "GUARD_IDEAL_MAX": "7"})
    assert (config.interval_max, config.iso_max, config.ideal_max) == (50, 2_000, 7)


def test_overrides_beat_environment():
    config = Config.from_env({"GUARD_INTERVAL_MAX": "50"}, interval_max=60, iso_max=None, base="zero")
    assert config.interval_max == 60
    assert config.iso_max == 2_000
    assert config.base is Base.ZERO


@pytest.mark.parametrize(
    "environ, overrides",
    [
        ({"GUARD_ISO_MAX": "many"}, {}),
        ({"GUARD_IDEAL_MAX": "0"}, {}),
        ({}, {"interval_max": -3}),
        ({}, {"output": "yaml"}),
    ],
)
def test_rejects_bad_values(environ, overrides):
    with pytest.raises(ConfigError):
        Config.from_env(environ, **overrides)


def test_replace_skips_unset_values():
    config = Config().replace(iso_max=None, stretch=True)
    assert config.iso_max == 2_000 and config.stretch
