import json

import pytest

from worked_example import EXAMPLE_MASKED, TABLE1
from vartani.lexicon import bundled_lexicon_path, load_lexicon
from vartani.mlm import MlmConfig, MockProvider
from vartani.ner import bundled_gazetteer_dir, load_gazetteers
from vartani.pipeline import PipelineConfig

# One PASS/FAIL line per acceptance criterion, printed after the run.
_ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _ACCEPTANCE_RESULTS.items():
        terminalreporter.write_line(f"{outcome}: {name}")


@pytest.fixture(scope="session")
def table1_candidates():
    return TABLE1


@pytest.fixture(scope="session")
def table1_provider():
    return MockProvider({(EXAMPLE_MASKED, 3): TABLE1})


@pytest.fixture(scope="session")
def sample_lexicon():
    return load_lexicon(bundled_lexicon_path())


@pytest.fixture(scope="session")
def sample_gazetteers():
    return load_gazetteers(bundled_gazetteer_dir())


@pytest.fixture()
def bundled_config():
    return PipelineConfig(
        lexicon_path=bundled_lexicon_path(),
        gazetteer_dir=bundled_gazetteer_dir(),
        mlm=MlmConfig(top_k=10),
    )


@pytest.fixture()
def mock_table_file(tmp_path):
    """Write the worked-example mock table to disk for CLI runs."""
    table = {
        " ".join(EXAMPLE_MASKED): {
            "candidates": [
                {"token": c.word, "prob": c.probability} for c in TABLE1
            ]
        }
    }
    path = tmp_path / "mock_table.json"
    path.write_text(json.dumps(table, ensure_ascii=False), encoding="utf-8")
    return str(path)
