import pytest
from hypothesis import strategies as st

from ddyck import DyckPath, SetPartition

_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        marker = report.user_properties and dict(report.user_properties).get("acceptance")
        if marker:
            _acceptance.setdefault(marker, []).append(report.outcome)


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    m = request.node.get_closest_marker("acceptance")
    if m:
        request.node.user_properties.append(("acceptance", (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcomes in sorted(_acceptance.items()):
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:>2}: {title}")


@st.composite
def dyck_paths(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    word, ups, downs = [], 0, 0
    while ups < n or downs < n:
        can_up, can_down = ups < n, downs < ups
        if can_up and (not can_down or draw(st.booleans())):
            word.append("U")
            ups += 1
        else:
            word.append("D")
            downs += 1
    return DyckPath("".join(word))


@st.composite
def set_partitions(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    rgs, top = [], -1
    for _ in range(n):
        b = draw(st.integers(0, top + 1))
        rgs.append(b)
        top = max(top, b)
    blocks = [[i + 1 for i, b in enumerate(rgs) if b == k] for k in range(top + 1)]
    return SetPartition(n, tuple(tuple(b) for b in blocks))
