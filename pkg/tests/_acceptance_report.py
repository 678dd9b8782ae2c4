"""Shared sink for the acceptance suite's per-criterion result lines; the
conftest terminal-summary hook prints them after the run."""

LINES = []


def record(num, ok, elapsed, detail):
    line = (f"ACCEPTANCE {num:>2}: {'PASS' if ok else 'FAIL'} "
            f"[{elapsed:8.2f}s] {detail}")
    LINES.append(line)
    print(line)
    return line
