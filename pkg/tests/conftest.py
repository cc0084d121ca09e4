import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_criteria: list[tuple[int, str, str, float]] = []
_setup_time = pytest.StashKey[float]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "setup":
        # module fixtures are built here; charge them to the criterion
        item.stash[_setup_time] = rep.duration
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        duration = rep.duration + (item.stash.get(_setup_time, 0.0) if rep.when == "call" else 0.0)
        _criteria.append((marker.args[0], marker.args[1], rep.outcome, duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}  ({duration:.1f}s)")
