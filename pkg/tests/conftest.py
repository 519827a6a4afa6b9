import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("tckit", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("tckit")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
    missing = [n for n in mod.TITLES if n not in results]
    for n in missing:
        terminalreporter.write_line(f"criterion {n:2d} NOT RUN: {mod.TITLES[n]}")
