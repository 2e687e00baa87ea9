import os
import pathlib
import subprocess

import pytest


def repo_root() -> pathlib.Path:
    env = os.environ.get("PI_ROOT")
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def root() -> pathlib.Path:
    return repo_root()


@pytest.fixture(scope="session")
def pi_bin() -> pathlib.Path:
    env = os.environ.get("PI_BIN")
    if env and pathlib.Path(env).exists():
        return pathlib.Path(env)
    for candidate in sorted(repo_root().glob("build*/pi")):
        if candidate.is_file() and os.access(candidate, os.X_OK):
            return candidate
    pytest.skip("pi binary not found (set PI_BIN)")


@pytest.fixture(scope="session")
def run_cli(pi_bin):
    def run(*args: str, env: dict | None = None) -> subprocess.CompletedProcess:
        full_env = dict(os.environ)
        if env:
            full_env.update(env)
        return subprocess.run(
            [str(pi_bin), *args], capture_output=True, text=True, env=full_env
        )

    return run


@pytest.fixture(scope="session")
def golden(root):
    def read(name: str) -> str:
        return (root / "tests" / "golden" / name).read_text()

    return read


@pytest.fixture(scope="session")
def program(root):
    def path(name: str) -> str:
        return str(root / "programs" / name)

    return path
