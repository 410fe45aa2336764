"""
Reading and writing moment-sequence JSON documents.

    {"max_order": 4, "moments": ["1", "0", "1", "0", "1"]}
"""

import json
import logging
from pathlib import Path
from typing import Optional

from ..exceptions import InvalidInputError, MomentFileError
from ..validators import SchemaValidator
from .models import MomentSequence

logger = logging.getLogger(__name__)

SCHEMA_NAME = "moment-sequence.json"


def parse_moment_string(content: str, validator: Optional[SchemaValidator] = None) -> MomentSequence:
    """Parse a moment document from a JSON string.

    Raises:
        MomentFileError: On JSON syntax errors, schema violations or μ_0 != 1.
    """
    try:
        data = json.loads(content)
    except json.JSONDecodeError as e:
        raise MomentFileError(f"Invalid JSON: {e.msg}", line_number=e.lineno, column=e.colno)

    errors = (validator or SchemaValidator(SCHEMA_NAME)).validate(data)
    if errors:
        raise MomentFileError("Moment file validation failed", errors=errors)

    try:
        return MomentSequence.from_dict(data)
    except InvalidInputError as e:
        raise MomentFileError(str(e))


def load_moment_file(file_path: Path) -> MomentSequence:
    """Parse a moment document from disk.

    Raises:
        MomentFileError: If the file is missing, unreadable or invalid.
    """
    file_path = Path(file_path)
    if not file_path.exists():
        raise MomentFileError(f"Moment file not found: {file_path}")
    try:
        content = file_path.read_text(encoding='utf-8')
    except OSError as e:
        raise MomentFileError(f"Error reading file {file_path}: {e}")
    sequence = parse_moment_string(content)
    logger.debug(f"Loaded moments up to order {sequence.max_order} from {file_path}")
    return sequence


def dump_moment_sequence(sequence: MomentSequence, file_path: Path) -> None:
    """Write a sequence in the document format load_moment_file accepts."""
    Path(file_path).write_text(json.dumps(sequence.to_dict(), indent=2) + "\n", encoding='utf-8')
