import pytest

from kleinrgw.characters import CACHE_ENV


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    """Keep character-table cache files out of the user's home directory."""
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "cache"))
