import pytest

from plactic import kernels

FIXTURE_WORD = (3, 6, 1, 3, 1, 5, 1, 2, 6, 5)

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture
def fixture_word():
    return FIXTURE_WORD


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


def symbols_of(obj) -> list[int]:
    """Multiset of symbols stored in a P-symbol, read straight off its structure."""
    kind = obj.to_record()["kind"]
    if kind in ("young_tableau", "quasi_ribbon_tableau"):
        return sorted(a for row in obj.rows for a in row)
    if kind in ("right_strict_bst", "left_strict_bst"):
        return sorted(obj.labels())
    if kind == "twin_bst_pair":
        return sorted(obj.right_tree.labels())
    if kind == "multiplicity_bst":
        return sorted(a for a, k in obj.items() for _ in range(k))
    if kind == "stalactic_tableau":
        return sorted(a for a, h in obj.columns for _ in range(h))
    if kind in ("lps_tableau", "rps_tableau"):
        return sorted(a for col in obj.columns for a in col)
    raise AssertionError(f"unknown kind {kind}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
