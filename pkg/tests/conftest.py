from hypothesis import HealthCheck, settings, strategies as st

# derandomized so that every run explores the same examples
settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def words(alphabet="abc", min_size=1, max_size=6):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


def word_sets(alphabet="abc", max_words=4, max_len=6):
    return st.sets(words(alphabet, 1, max_len), min_size=1, max_size=max_words)


# acceptance criteria summary: one PASS/FAIL line per criterion

import pytest  # noqa: E402

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    n, title = mark.args
    ok = _CRITERIA.get(n, (title, True))[1]
    _CRITERIA[n] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
