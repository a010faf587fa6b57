"""Versioned worked-example fixtures shipped with the package."""

import json
from importlib import resources


def load_fixture(name: str) -> dict:
    """Return the raw JSON document for fixture ``name`` (``f1`` .. ``f4``)."""
    text = resources.files(__package__).joinpath(f"{name}.json").read_text()
    return json.loads(text)
