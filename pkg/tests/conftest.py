"""Shared test helpers and the acceptance-criteria summary hook."""

import numpy as np

from zcascade import ChannelConfig

_ACCEPTANCE_LINES = []


def record_criterion(number: int, description: str, passed: bool, detail: str = "") -> bool:
    """Register one acceptance-criterion outcome and echo it immediately."""
    status = "PASS" if passed else "FAIL"
    line = f"[PRIMARY {number}] {status} {description}"
    if detail:
        line += f" ({detail})"
    _ACCEPTANCE_LINES.append(line)
    print(line, flush=True)
    return passed


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_channel(rng: np.random.Generator, k: int, p_hi: float = 50.0) -> ChannelConfig:
    """Random valid chain with every gain below the very-strong threshold."""
    p = rng.uniform(0.2, p_hi, size=k)
    a = rng.uniform(0.0, np.sqrt(1.0 + p[1:]))
    return ChannelConfig(K=k, a=a, P=p)
