import logging
from typing import Dict, List, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

log = logging.getLogger(__name__)


def plot_rows(path: str, rows: List[Dict[str, str]], x_field: str, y_fields: Sequence[str], title: str) -> None:
    """
    Render report columns against x on a logarithmic x axis and save the figure to path

    Parameters
    ----------
    path: str
        Figure file; the format follows its extension
    rows: List[Dict[str, str]]
        Report rows as written to the data stream
    x_field: str
    y_fields: Sequence[str]
        One line per field
    title: str
    """
    xs = [float(row[x_field]) for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for field in y_fields:
        ax.plot(xs, [float(row[field]) for row in rows], marker="o", label=field)
    ax.set_xscale("log")
    ax.set_xlabel(x_field)
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    log.info("Saved figure %s" % path)
