import json
from ..cli import main
from ..selftest import CHECKS, run_selftest


def test_smoke_main(capsys):
    assert main(["selftest"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True
    assert [c["name"] for c in doc["checks"]] == [name for name, _, _ in CHECKS]


def test_selftest_is_deterministic():
    assert run_selftest(5) == run_selftest(5)
