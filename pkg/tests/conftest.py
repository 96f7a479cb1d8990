# acceptance lines collected here are echoed in the terminal summary even when output is captured
RESULT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if RESULT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in RESULT_LINES:
            terminalreporter.write_line(line)
