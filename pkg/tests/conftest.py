import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arithgenus import Ideal, parse_polynomial  # noqa: E402
from arithgenus.constructions import segre_minors_ideal, segre_product_ideal  # noqa: E402
from arithgenus.invariants import random_form  # noqa: E402


def ideal(nvars, *exprs):
    return Ideal([parse_polynomial(e, nvars) for e in exprs], nvars)


TWISTED_CUBIC = ("x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")
PLANE_CUBIC = ("x0^3 + x1^3 + x2^3",)


def small_ideals():
    """Ideals in at most 5 variables: cheap enough for linear-algebra oracles."""
    return {
        "P2": Ideal([], 3),
        "P3": Ideal([], 4),
        "conic": ideal(3, "x0*x2 - x1^2"),
        "plane_cubic": ideal(3, *PLANE_CUBIC),
        "double_line": ideal(3, "x0^2"),
        "three_points": ideal(2, "x0*x1*(x0 - x1)"),
        "twisted_cubic": ideal(4, *TWISTED_CUBIC),
        "elliptic_quartic": Ideal([random_form(2, 4, 11), random_form(2, 4, 12)], 4),
        "quartic_surface": Ideal([random_form(4, 4, 0)], 4),
        "segre_P1xP1": segre_minors_ideal(2, 2),
        "rational_normal_quartic": ideal(
            5,
            "x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3",
            "x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2",
        ),
        "line_plus_cubic": ideal(3, "x2*(x0^3 + x1^3 + x2^3)"),
        "two_skew_lines": ideal(4, "x0*x2", "x0*x3", "x1*x2", "x1*x3"),
    }


def test_matrix():
    """Everything in ``small_ideals`` plus two 9-variable Segre products."""
    out = dict(small_ideals())
    out["line_x_cubic"] = segre_product_ideal(ideal(3, "x2"), ideal(3, *PLANE_CUBIC))
    out["conic_x_cubic"] = segre_product_ideal(ideal(3, "x0*x2 - x1^2"), ideal(3, *PLANE_CUBIC))
    return out


test_matrix.__test__ = False


@pytest.fixture(scope="session")
def matrix_ideals():
    return test_matrix()


@pytest.fixture
def twisted_cubic():
    return ideal(4, *TWISTED_CUBIC)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
