import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seriesfair.core import BivariatePolynomial  # noqa: E402

R_PAPER = 0.894762228

# (criterion number, title) -> list of (subcheck, passed, detail)
ACCEPTANCE: dict[tuple[int, str], list[tuple[str, bool, str]]] = {}


@pytest.fixture
def P():
    return BivariatePolynomial.p()


@pytest.fixture
def R():
    return BivariatePolynomial.r()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), subs in sorted(ACCEPTANCE.items()):
        failed = [s for s in subs if not s[1]]
        status = "PASS" if not failed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {title} ({len(subs) - len(failed)}/{len(subs)})")
        for name, _, detail in failed:
            terminalreporter.write_line(f"         failed: {name} {detail}")
