import pytest
from hypothesis import HealthCheck, settings

from skewinv.config import parse_session

settings.register_profile("repo", deadline=None, derandomize=True, print_blob=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def session(text: str, **kw):
    sess, _ = parse_session(text, **kw)
    return sess


@pytest.fixture(scope="session")
def v3_s3():
    return session("algebra: V n=3\nbound: 6\ngroup: S3")


@pytest.fixture(scope="session")
def v4_klein():
    return session("algebra: V n=4\nbound: 8\ngroup: s = (1 2)(3 4); t = (1 3)(2 4)")


@pytest.fixture(scope="session")
def v2_swap():
    return session("algebra: V n=2\nbound: 6\ngroup: s = (1 2)")


ACCEPTANCE = "test_acceptance.py::test_criterion_"
LABELS = {"passed": "PASS", "failed": "FAIL", "xpassed": "XPASS (unexpected)"}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if ACCEPTANCE in item.nodeid:
        doc = (item.function.__doc__ or "").strip().splitlines()
        rep.criterion = doc[0] if doc else item.name


def pytest_terminal_summary(terminalreporter):
    seen = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            crit = getattr(rep, "criterion", None)
            if crit is None:
                continue
            if rep.when == "call" or rep.outcome != "passed":
                if hasattr(rep, "wasxfail"):
                    label = "XFAIL (expected, see reason)"
                else:
                    label = LABELS.get(rep.outcome, rep.outcome.upper())
                seen[rep.nodeid] = f"{label:<34} {crit}"
    if seen:
        terminalreporter.section("acceptance criteria")
        for nodeid in sorted(seen):
            terminalreporter.write_line(seen[nodeid])
