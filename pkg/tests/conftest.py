"""Shared example frameworks for the test modules, plus the terminal
summary section that lists the acceptance-criterion verdicts."""
import pytest

from bipolaraba import AbaFramework, Baf

acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


def build_ex22():
    """Four assumptions a..d with pairwise contraries na..nd; c derives d,
    so {c} is not closed."""
    return AbaFramework(
        ["a", "b", "c", "d", "na", "nb", "nc", "nd"],
        ["a", "b", "c", "d"],
        {"a": "na", "b": "nb", "c": "nc", "d": "nd"},
        [("nb", ("a",)), ("na", ("b",)), ("nd", ("b",)),
         ("nb", ("c",)), ("d", ("c",))])


def build_ex44():
    """a and b jointly derive the assumption c, whose contrary follows from
    c itself."""
    return AbaFramework(
        ["a", "b", "c", "na", "nb", "nc", "p", "q"],
        ["a", "b", "c"],
        {"a": "na", "b": "nb", "c": "nc"},
        [("p", ("a",)), ("q", ("b",)), ("c", ("p", "q")), ("nc", ("c",))])


def build_motivating():
    return AbaFramework(
        ["cc", "mr", "sr", "s", "not_cc", "not_mr", "not_sr"],
        ["cc", "mr", "sr"],
        {"cc": "not_cc", "mr": "not_mr", "sr": "not_sr"},
        [("mr", ("cc",)), ("not_mr", ("sr",)), ("not_sr", ("s",)), ("s", ())])


def build_ex32():
    return Baf(5, [(0, 1), (1, 0), (3, 2), (1, 4)], [(1, 2), (3, 4)],
               ["x", "y", "z", "u", "v"])


def build_ex38():
    return Baf(3, [(0, 1)], [(2, 1)], ["x", "y", "z"])


@pytest.fixture
def ex22():
    return build_ex22()


@pytest.fixture
def ex44():
    return build_ex44()


@pytest.fixture
def motivating():
    return build_motivating()


@pytest.fixture
def ex32():
    return build_ex32()


@pytest.fixture
def ex38():
    return build_ex38()


def names_of(frame, ext):
    return sorted(frame.names[i] for i in ext)


def named_family(frame, extensions):
    return sorted(names_of(frame, e) for e in extensions)
