"""
Static SVG plots of solver output.

Uses the non-interactive Agg backend; figures are written and closed, never
shown.
"""
import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from genfrac.solvers.psido import PsidoSolution  # noqa: E402
from genfrac.solvers.solution import SolutionCurve  # noqa: E402

logger = logging.getLogger(__name__)


def plot_solution_curve(curve: SolutionCurve, path: Union[str, Path],
                        title: Optional[str] = None, band: float = 2.0) -> Path:
    """
    Line plot of every component with a ±band·std_error shaded region.

    Args:
        curve: Solution to plot
        path: Output file, normally ending in .svg
        title: Figure title
        band: Width of the error band in standard errors

    Returns:
        Path written
    """
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    try:
        for j in range(curve.dimension):
            line, = ax.plot(curve.grid, curve.values[:, j], label=f'f_{j}(x)')
            if np.any(curve.std_error[:, j] > 0):
                ax.fill_between(curve.grid,
                                curve.values[:, j] - band * curve.std_error[:, j],
                                curve.values[:, j] + band * curve.std_error[:, j],
                                color=line.get_color(), alpha=0.2, linewidth=0)
        ax.set_xlabel('x')
        ax.set_ylabel('f(x)')
        ax.set_title(title or curve.metadata.get('problem', 'solution'))
        if curve.dimension > 1:
            ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(path, format='svg', metadata={'Date': None})
    finally:
        plt.close(fig)
    logger.info(f"Plot written to {path}")
    return path


def plot_psido_field(solution: PsidoSolution, path: Union[str, Path],
                     title: Optional[str] = None) -> Path:
    """Heat map of the field f(t, w) over the t grid and the spatial nodes."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    try:
        mesh = ax.pcolormesh(solution.nodes, solution.t_grid, np.real(solution.values),
                             shading='nearest')
        fig.colorbar(mesh, ax=ax, label='f(t, w)')
        ax.set_xlabel('w')
        ax.set_ylabel('t')
        ax.set_title(title or 'psido field')
        fig.tight_layout()
        fig.savefig(path, format='svg', metadata={'Date': None})
    finally:
        plt.close(fig)
    logger.info(f"Plot written to {path}")
    return path
