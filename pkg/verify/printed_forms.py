"""
Ranking of candidate readings of the unequal-diffusion v component.
"""

import logging
from dataclasses import dataclass

from models.solution import Family, SolutionSpec
from settings.defaults import FD_STEP
from solutions.catalogue import instantiate
from verify.residuals import residual_report

logger = logging.getLogger(__name__)

DEFAULT_POWERS = (1.0 / 3.0, 0.5, 1.0, 1.5)


@dataclass(frozen=True)
class PrintedFormCandidate:
    """
    One reading of the x-slope term (sign) scale (3 sigma / D)^power e^{sigma t}.

    Attributes:
        power (float): Exponent of 3 sigma / D
        scale (float): Prefactor
        linf (float): Residual sup-norm on the sampling grid
    """

    power: float
    scale: float
    linf: float

    def to_dict(self):
        return {"power": self.power, "scale": self.scale, "linf": self.linf}


def printed_form_scan(params, grid, sign=1, c=0.0, powers=DEFAULT_POWERS, scales=None, h=FD_STEP):
    """
    Residual of each candidate reading, best first.

    Args:
        params (ModelParams): Coefficients admissible for F7
        grid (GridSpec): Sample nodes
        sign (int): Branch of f
        c (float): Integration constant
        powers (sequence): Exponents to try
        scales (sequence, optional): Prefactors to try, default (1, 1/S)
        h (float): Difference step

    Returns:
        list: PrintedFormCandidate sorted by residual
    """
    if scales is None:
        scales = (1.0, 1.0 / params.S)
    results = []
    for power in powers:
        for scale in scales:
            spec = SolutionSpec(
                Family.F7_CONDITIONAL_UNEQUAL, params,
                {"sign": float(sign), "C": c, "printed_power": power, "printed_scale": scale},
                form="printed", unverified_as_printed=True,
            )
            report = residual_report(instantiate(spec), grid, h)
            results.append(PrintedFormCandidate(power, scale, report.linf))
    results.sort(key=lambda candidate: candidate.linf)
    logger.info("best reading: power=%g scale=%g linf=%.3e", results[0].power, results[0].scale, results[0].linf)
    return results
