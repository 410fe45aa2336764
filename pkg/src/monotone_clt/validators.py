"""
JSON Schema validation for documents read from disk (moment files, run configs).
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from .exceptions import SchemaError

SCHEMA_DIR = Path(__file__).resolve().parent.parent.parent / "schemas"


class SchemaValidator:
    """Validates parsed documents against one of the bundled Draft-7 schemas."""

    def __init__(self, schema_name: str, schema_path: Optional[Path] = None):
        """Initialize validator with schema.

        Args:
            schema_name: File name under schemas/, e.g. "moment-sequence.json".
            schema_path: Explicit schema file overriding the bundled one.
        """
        self.schema_path = schema_path or SCHEMA_DIR / schema_name
        self.schema = self._load_schema()
        self.validator = jsonschema.Draft7Validator(self.schema)

    def _load_schema(self) -> Dict[str, Any]:
        if not self.schema_path.exists():
            raise SchemaError(f"Schema file not found: {self.schema_path}")
        try:
            with open(self.schema_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise SchemaError(f"Invalid JSON in schema file: {e}")

    def validate(self, data: Any) -> List[str]:
        """Return one message per schema violation, ordered by document path."""
        errors = sorted(self.validator.iter_errors(data), key=lambda e: [str(p) for p in e.path])
        messages = []
        for error in errors:
            path = ".".join(str(p) for p in error.path) if error.path else "root"
            messages.append(f"{path}: {error.message}")
        return messages
