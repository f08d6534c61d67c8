"""Result-file management for credit-equilibrium."""
import io
import logging
import os
import tempfile
from pathlib import Path

import pandas as pd

from ..config import OUTPUT_DIR

logger = logging.getLogger(__name__)


def resolve_output_path(out):
    """
    Place a bare file name under OUTPUT_DIR; leave other paths alone.

    Args:
        out (str): Path given on the command line

    Returns:
        Path: Where the file goes
    """
    path = Path(out)
    if path.parent == Path('.') and not path.is_absolute():
        return Path(OUTPUT_DIR) / path
    return path


def render_table(df, metadata=None):
    """
    Render a table as CSV text.

    Metadata becomes leading '# key=value' lines in key order, then the
    header and rows with 17 significant digits and LF line endings.

    Args:
        df (pd.DataFrame): Table to render
        metadata (dict, optional): Key/value pairs to prepend

    Returns:
        str: The file contents
    """
    buffer = io.StringIO()
    for key in sorted(metadata or {}):
        buffer.write(f'# {key}={metadata[key]}\n')
    df.to_csv(buffer, index=False, float_format='%.17g', lineterminator='\n')
    return buffer.getvalue()


def write_table(df, out, metadata=None):
    """
    Write a table atomically: to a temporary file, then renamed into place.

    Args:
        df (pd.DataFrame): Table to write
        out (str): Destination
        metadata (dict, optional): Key/value pairs for the comment header

    Returns:
        Path: The written file
    """
    path = resolve_output_path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = render_table(df, metadata)

    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("Wrote %d rows to %s", len(df), path)
    return path


def read_metadata(path):
    """
    Read the '# key=value' lines at the top of a result file.

    Returns:
        dict: Metadata values as strings
    """
    metadata = {}
    with open(path, encoding='utf-8') as handle:
        for line in handle:
            if not line.startswith('#'):
                break
            key, _, value = line[1:].strip().partition('=')
            metadata[key.strip()] = value
    return metadata


def read_table(path):
    """
    Read a result file written by write_table.

    Returns:
        pd.DataFrame: The table without its comment header
    """
    return pd.read_csv(path, comment='#')
