import json
import logging
import os

import pandas as pd

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["p", "m", "variant", "regime", "N", "K", "d", "match", "optimal", "dual", "runtime_ms"]


def matrix_filename(p, m, variant):
    return f"gmatrix_p{p}_m{m}_{variant}.csv"


def write_generator_matrix(matrix, p, m, variant, out=None):
    """
    Write the generator matrix as decimal residues, one row per line, no header.

    Args:
        out (str): Target directory, or a path ending in .csv; defaults to the working directory

    Returns:
        str: The path written
    """
    if out and out.endswith(".csv"):
        path = out
    else:
        path = os.path.join(out or ".", matrix_filename(p, m, variant))
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    pd.DataFrame(matrix).to_csv(path, header=False, index=False)
    logger.info("Wrote %d x %d generator matrix to %s", len(matrix), len(matrix[0]), path)
    return path


def report_json(report):
    return json.dumps(report.to_dict(), indent=2)


def sweep_frame(rows):
    """Sweep rows in the fixed column order; an empty sweep gives a header-only frame."""
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def write_text(text, out=None):
    """Write text to a file, or to stdout when out is None."""
    if out is None:
        print(text)
        return None
    directory = os.path.dirname(out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text if text.endswith("\n") else text + "\n")
    logger.info("Wrote %s", out)
    return out
