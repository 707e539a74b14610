import math

import pytest
from hypothesis import given, strategies as st

from mckibben.config import ConfigError, RunConfig, parse_text
from mckibben.units import ANGLE, DIMENSIONLESS, LENGTH, PRESSURE, UnitError, format_si, parse_quantity


@pytest.mark.parametrize("text, kind, expected", [
    ("145mm", LENGTH, 0.145),
    ("145 mm", LENGTH, 0.145),
    ("0.145m", LENGTH, 0.145),
    ("1.7cm", LENGTH, 0.017),
    ("90deg", ANGLE, math.pi / 2),
    ("1.2 rad", ANGLE, 1.2),
    ("1kPa", PRESSURE, 1000.0),
    ("0.3 MPa", PRESSURE, 3e5),
    ("250Pa", PRESSURE, 250.0),
    ("16", DIMENSIONLESS, 16.0),
    ("1e-3 m", LENGTH, 1e-3),
])
def test_parse_quantity(text, kind, expected):
    assert parse_quantity(text, kind) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("text, kind", [
    ("145", LENGTH), ("145 kg", LENGTH), ("10 mm", ANGLE), ("16 mm", DIMENSIONLESS), ("abc", LENGTH),
])
def test_parse_quantity_rejects(text, kind):
    with pytest.raises(UnitError):
        parse_quantity(text, kind)


@given(st.floats(1e-9, 1e9), st.sampled_from([LENGTH, ANGLE, PRESSURE, DIMENSIONLESS]))
def test_format_si_round_trip(value, kind):
    assert parse_quantity(format_si(value, kind), kind) == value


def test_defaults_are_reference():
    cfg = RunConfig()
    assert (cfg.L, cfg.D, cfg.N, cfg.t_k) == (0.145, 0.017, 16.0, 1e-3)
    assert cfg.n == (1, 2, 4, 8, 16, 32, 64)


def test_parse_text():
    cfg = RunConfig.from_text("""
        # comment
        L = 100 mm   # trailing comment
        D = 1 cm
        n = 1, 3
        policy = absolute
        t_hat = 0.1
    """)
    assert cfg.L == pytest.approx(0.1) and cfg.D == pytest.approx(0.01)
    assert cfg.n == (1, 3)
    assert cfg.policy == "absolute"
    assert cfg.t_hat == 0.1 and cfg.t_k is None


@pytest.mark.parametrize("text", [
    "bogus = 1",
    "L = 145",
    "L 145 mm",
    "L = 1 mm\nL = 2 mm",
    "policy = sideways",
    "t_k = 1 mm\nt_hat = 0.1",
    "n = 1, two",
])
def test_strict_parsing(text):
    with pytest.raises(ConfigError):
        RunConfig.from_text(text)


configs = st.builds(
    lambda L, D, N, th, t, P, ns: RunConfig().replace(
        L=L, D=D, N=N, theta=th, t_k=t, pressure=P, n=ns
    ),
    st.floats(1e-4, 10), st.floats(1e-4, 1), st.floats(0.5, 100),
    st.floats(0.01, 1.5), st.floats(0, 1e-2), st.floats(0, 1e7),
    st.lists(st.integers(1, 1000), min_size=1, max_size=5),
)


@given(configs)
def test_config_round_trip(cfg):
    again = RunConfig.from_text(cfg.to_text())
    assert again == cfg


def test_parse_text_returns_si():
    assert parse_text("theta1 = 90 deg") == {"theta1": math.pi / 2}
