import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one verdict line per acceptance criterion, visible without -s
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
