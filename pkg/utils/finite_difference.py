"""
Fourth-order central difference stencils and Richardson extrapolation.
"""

import numpy as np


def first_derivative(f, z, h):
    """
    Fourth-order central first derivative.

    Args:
        f (callable): Function of one real variable, scalar or array valued
        z (float): Evaluation point
        h (float): Step

    Returns:
        Derivative estimate with the shape of f(z)
    """
    fm2, fm1 = np.asarray(f(z - 2 * h)), np.asarray(f(z - h))
    fp1, fp2 = np.asarray(f(z + h)), np.asarray(f(z + 2 * h))
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)


def second_derivative(f, z, h, f0=None):
    """
    Fourth-order central second derivative.

    Args:
        f (callable): Function of one real variable
        z (float): Evaluation point
        h (float): Step
        f0 (optional): Precomputed f(z)

    Returns:
        Second-derivative estimate with the shape of f(z)
    """
    if f0 is None:
        f0 = f(z)
    fm2, fm1 = np.asarray(f(z - 2 * h)), np.asarray(f(z - h))
    fp1, fp2 = np.asarray(f(z + h)), np.asarray(f(z + 2 * h))
    return (-fm2 + 16.0 * fm1 - 30.0 * np.asarray(f0) + 16.0 * fp1 - fp2) / (12.0 * h * h)


def richardson(coarse, fine, order=4):
    """
    Combine estimates at steps h and h/2 to cancel the leading error term.

    Args:
        coarse: Estimate with step h
        fine: Estimate with step h/2
        order (int): Order of the leading truncation term

    Returns:
        Extrapolated estimate
    """
    factor = 2.0 ** order
    return fine + (fine - coarse) / (factor - 1.0)


def laplacian_1d(values, dx):
    """
    Second-order interior Laplacian; the two end entries are left at zero.

    Args:
        values (np.ndarray): Node values
        dx (float): Uniform spacing

    Returns:
        np.ndarray: Laplacian with zero end entries
    """
    out = np.zeros_like(values)
    out[1:-1] = (values[:-2] - 2.0 * values[1:-1] + values[2:]) / (dx * dx)
    return out


def observed_order(errors, ratio=2.0):
    """
    Observed convergence orders from successive errors.

    Args:
        errors (sequence): Errors on successively refined levels
        ratio (float): Refinement ratio between levels

    Returns:
        list: log_ratio(e_k / e_{k+1}) for every consecutive pair
    """
    errors = np.asarray(errors, dtype=float)
    return [float(np.log(errors[k] / errors[k + 1]) / np.log(ratio)) for k in range(len(errors) - 1)]


def log_log_slope(xs, ys):
    """Least-squares slope of log(ys) against log(xs)."""
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)
