import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from starinv.gaussian import GaussianRational
from starinv.starring import CarrierSpec, make_element

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

M2Z2 = CarrierSpec("ZN", 2, 2)
SMALL_RINGS = [CarrierSpec("ZN", 1, n) for n in (4, 6, 8, 9, 12)]
FINITE = [M2Z2, *SMALL_RINGS]

small_fractions = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 4))


@st.composite
def elements(draw, spec):
    d = spec.dim
    if spec.domain == "ZN":
        vals = draw(st.lists(st.integers(0, spec.modulus - 1), min_size=d * d, max_size=d * d))
    elif spec.domain == "Q":
        vals = draw(st.lists(small_fractions, min_size=d * d, max_size=d * d))
    else:
        pairs = st.builds(GaussianRational, small_fractions, small_fractions)
        vals = draw(st.lists(pairs, min_size=d * d, max_size=d * d))
    return make_element(spec, vals)


carriers = st.sampled_from([
    CarrierSpec("Q", 1), CarrierSpec("Q", 2), CarrierSpec("Q", 3), CarrierSpec("QI", 2),
    CarrierSpec("ZN", 1, 6), CarrierSpec("ZN", 2, 2), CarrierSpec("ZN", 2, 3),
    CarrierSpec("ZN", 2, 4),
])


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "ACCEPTANCE_RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
