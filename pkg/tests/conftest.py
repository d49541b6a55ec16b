import os
import shutil
import tempfile
import uuid
from pathlib import Path

import pytest

from smptw.schema import SmptwParams

REPO_ROOT = Path(__file__).resolve().parent.parent
KEVLAR_CSV = REPO_ROOT / "data" / "kevlar373.csv"

# Simulation pairs plus the exponential member and a large-lambda case
GRID = [(3.0, 7.0), (1.5, 2.0), (2.5, 1.2), (3.5, 1.7), (0.5, 4.5), (1.0, 1.0), (9.0, 1.0)]


def _select_base_dir():
    system_base = Path(tempfile.gettempdir()) / "smptw-pytest"
    local_base = REPO_ROOT / "temp" / "pytest"

    for candidate in (system_base, local_base):
        try:
            candidate.mkdir(parents=True, exist_ok=True)
            marker = candidate / ".write_check"
            marker.write_text("ok")
            marker.unlink(missing_ok=True)
            return candidate
        except PermissionError:
            continue

    # Last resort: keep local_base even if the write check failed
    local_base.mkdir(parents=True, exist_ok=True)
    return local_base


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run full-scale simulation tests"
    )


def pytest_configure(config):
    """
    Force pytest/tempfile to use a workspace-local temp directory.
    This avoids PermissionError when the system temp directory is not writable.
    """
    config.addinivalue_line("markers", "slow: full-scale reproduction, needs --runslow")

    base = _select_base_dir()

    os.environ["TMPDIR"] = str(base)
    os.environ["TEMP"] = str(base)
    os.environ["TMP"] = str(base)
    tempfile.tempdir = str(base)
    config.option.basetemp = str(base / "basetemp")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def tmp_path():
    """
    Provide a writable temp directory under system temp when possible.
    Overrides pytest's default tmp_path fixture.
    """
    base = _select_base_dir() / "pytest_tmp"
    base.mkdir(parents=True, exist_ok=True)
    path = base / uuid.uuid4().hex
    path.mkdir(parents=True, exist_ok=True)
    try:
        yield path
    finally:
        shutil.rmtree(path, ignore_errors=True)


@pytest.fixture(params=GRID, ids=lambda p: f"lam{p[0]}-phi{p[1]}")
def grid_params(request) -> SmptwParams:
    lam, phi = request.param
    return SmptwParams(lambda_=lam, phi=phi)


@pytest.fixture
def kevlar_values():
    """The bundled fracture data; tests using it are skipped if the file is gone."""
    if not KEVLAR_CSV.exists():
        pytest.skip(f"bundled dataset missing: {KEVLAR_CSV}")
    from smptw.services.dataset_service import load_dataset

    return load_dataset(KEVLAR_CSV).values
