import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hcfam.arith import GaussianRational, LaurentPoly, Poly

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())
polys = st.lists(gaussians, max_size=6).map(Poly)
laurents = st.builds(LaurentPoly, st.lists(gaussians, max_size=5), st.integers(-4, 4))


def random_gaussian(rng: random.Random, bound: int = 5, nonzero: bool = False) -> GaussianRational:
    while True:
        z = GaussianRational(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)),
                             Fraction(rng.randint(-bound, bound), rng.randint(1, 4)))
        if z or not nonzero:
            return z


def random_poly(rng: random.Random, max_degree: int = 3) -> Poly:
    return Poly([random_gaussian(rng) for _ in range(rng.randint(0, max_degree + 1))])


# acceptance criteria report their verdict here; printed in the terminal summary
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        verdict, title = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d} {verdict}: {title}")


@pytest.fixture
def rng():
    return random.Random(20240917)
