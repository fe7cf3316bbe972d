"""Per-criterion verdict lines, re-printed in the pytest terminal summary."""

CRITERIA = 8
LINES: dict[int, str] = {}


def record(n: int, title: str, failures: list[str]) -> None:
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
    if not ok:
        line += f" [{len(failures)} failure(s); first: {failures[0]}]"
    LINES[n] = line
    print(line)
    assert ok, line
