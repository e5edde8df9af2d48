import functools

ACCEPTANCE_LINES = []


def criterion(label, description):
    """Record a PASS/FAIL line for an acceptance test, then re-raise any failure."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                ACCEPTANCE_LINES.append(f"{label:>9}: FAIL  {description}  ({type(exc).__name__})")
                raise
            ACCEPTANCE_LINES.append(f"{label:>9}: PASS  {description}")

        return inner

    return wrap


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=_order):
            terminalreporter.write_line(line)


def _order(line):
    head = line.split(":")[0].strip()
    return (0, int(head[1:])) if head[1:].isdigit() else (1, head)
