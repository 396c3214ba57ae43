import sys
import time
from pathlib import Path
from types import SimpleNamespace

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from modcheck.endo import enumerate_endomorphisms  # noqa: E402
from modcheck.harness.corpus import CorpusConfig, corpus_summary  # noqa: E402
from modcheck.harness.profile import clear_profiles  # noqa: E402
from modcheck.harness.report import emit_report  # noqa: E402
from modcheck.harness.verifiers import corpus_for, verify_all  # noqa: E402
from modcheck.module import submodule_lattice  # noqa: E402
from modcheck.mult import _structure  # noqa: E402

CRITERIA = {
    1: "criterion equivalence over the default corpus",
    2: "implication chain",
    3: "separation witnesses",
    4: "cyclic-module suite",
    5: "multiplication suite",
    6: "fully-invariant suite",
    7: "product suite",
    8: "engine-correctness oracles",
    9: "CLI contract",
}

_outcomes = {}

settings.register_profile("modcheck", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("modcheck")


def clear_caches():
    clear_profiles()
    corpus_for.cache_clear()
    enumerate_endomorphisms.cache_clear()
    submodule_lattice.cache_clear()
    _structure.cache_clear()


@pytest.fixture(scope="session")
def default_run():
    """One full verification of the default configuration, shared by every test that needs it."""
    clear_caches()
    cfg = CorpusConfig()
    start = time.perf_counter()
    reports = verify_all(cfg)
    elapsed = time.perf_counter() - start
    return SimpleNamespace(
        cfg=cfg,
        reports=reports,
        by_id={r.theorem: r for r in reports},
        elapsed=elapsed,
        json=emit_report(reports, "json", cfg.to_dict(), corpus_summary(corpus_for(cfg))),
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


def pytest_runtest_logreport(report):
    n = getattr(report, "criterion", None)
    if n is None:
        return
    failed = report.failed
    if report.when == "call" or failed:
        _outcomes[n] = _outcomes.get(n, True) and not failed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        if n in _outcomes:
            status = "PASS" if _outcomes[n] else "FAIL"
        else:
            status = "NOT RUN"
        terminalreporter.write_line(f"criterion {n}: {status}  ({text})")
