import mpmath
import pytest

from berndt.mpcore import GUARD_DIGITS


@pytest.fixture
def mp50():
    ctx = mpmath.MPContext()
    ctx.dps = 50
    return ctx


def tight(prec: int):
    """10^-(P - G), the accuracy every elementary evaluation should reach."""
    return mpmath.mpf(10) ** (-(prec - GUARD_DIGITS))
