import pytest

ACCEPTANCE = pytest.StashKey[dict]()


class Criterion:
    def __init__(self, number: int):
        self.number = number
        self.clauses: list[tuple[str, bool]] = []

    def check(self, label: str, ok: bool) -> None:
        self.clauses.append((label, bool(ok)))

    @property
    def failed(self) -> list[str]:
        return [label for label, ok in self.clauses if not ok]

    def line(self) -> str:
        mark = "PASS" if self.clauses and not self.failed else "FAIL"
        shown = self.failed or [label for label, _ in self.clauses] or ["no clause reached"]
        return f"criterion {self.number}: {mark}  " + "; ".join(shown)

    def verdict(self) -> None:
        assert not self.failed, self.line()


@pytest.fixture
def criterion(request):
    """Collects clause results; the summary line is recorded even if the test raises."""
    c = Criterion(request.node.get_closest_marker("criterion").args[0])
    yield c
    request.config.stash.setdefault(ACCEPTANCE, {})[c.number] = c.line()
    print(f"\n{c.line()}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter, config):
    board = config.stash.get(ACCEPTANCE, {})
    if board:
        terminalreporter.section("acceptance criteria")
        for number in sorted(board):
            terminalreporter.write_line(board[number])
