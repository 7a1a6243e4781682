import pytest

from blockade.errors import ParameterError
from blockade.verify import Check, run_suite


def by_name(checks):
    return {c.name: c for c in checks}


@pytest.mark.parametrize("suite,params", [
    ("lemma18", dict(n=4, r=6)),
    ("knuth", dict(n=3, r=5)),
    ("product", dict(n=5, r=5)),
    ("demorgan", dict(n=3, r=3)),
    ("landmarks", dict(n=7, r=3)),
    ("theorem-bisa", dict(n=5, r=2)),
    ("shifting", dict(n=3, r=2, samples=30)),
    ("shifting", dict(n=5, r=2, space="subsets", samples=30)),
    ("g-lemma", dict(n=2, r=3, k=2)),
    ("rainbow-k2", dict(n=3, r=2)),
])
def test_suites_pass(suite, params):
    checks = run_suite(suite, **params)
    assert checks and all(c.passed for c in checks), [c.line() for c in checks]
    assert all(c.checked > 0 for c in checks)


def test_fractal_literal_statement_holds_at_n2():
    assert all(c.passed for c in run_suite("fractal", n=2, r=6))


def test_fractal_literal_statement_fails_at_n3():
    checks = run_suite("fractal", n=3, r=3)
    failed = [c for c in checks if not c.passed]
    assert len(failed) == 1 and "as stated" in failed[0].name
    assert failed[0].counterexample == (0, 1, 0)
    assert "counterexample=(0, 1, 0)" in failed[0].line()


def test_unknown_suite():
    with pytest.raises(ParameterError):
        run_suite("nope", n=2, r=2)


def test_check_line():
    assert Check("x", True, 3).line() == "PASS x (3 checked)"
