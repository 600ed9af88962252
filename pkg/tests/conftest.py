import random
from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("exact", max_examples=40, deadline=None)
settings.load_profile("exact")


@pytest.fixture
def rng():
    return random.Random(1234)


def random_scalar(ctx, rng, depth=2):
    """Small random element of the scalar field built from x, r, constants."""
    atoms = [ctx.x(a) for a in range(1, ctx.dim + 1)] + [ctx.r, ctx.const(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))]
    e = rng.choice(atoms)
    for _ in range(depth):
        other = rng.choice(atoms)
        op = rng.choice("+-*")
        e = e + other if op == "+" else e - other if op == "-" else e * other
    if rng.random() < 0.3:
        e = e * ctx.i
    return e


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
