from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lkforms.braid import BraidWord
from lkforms.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

exponents = st.integers(min_value=-4, max_value=4)
coefficients = st.integers(min_value=-6, max_value=6)

polys = st.dictionaries(st.tuples(exponents, exponents), coefficients, max_size=5).map(LaurentPoly)
nonzero_polys = polys.filter(bool)
units = st.builds(lambda s, a, b: LaurentPoly.monomial(a, b, s), st.sampled_from([1, -1]), exponents, exponents)


def words(n: int, max_len: int = 10):
    letters = st.integers(min_value=1, max_value=n - 1).flatmap(lambda m: st.sampled_from([m, -m]))
    return st.lists(letters, max_size=max_len).map(lambda xs: BraidWord(n, tuple(xs)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
