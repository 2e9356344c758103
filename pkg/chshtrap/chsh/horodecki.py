"""
Horodecki criterion: maximum CHSH-Bell value over all settings.

    B_max = 2 sqrt(u1 + u2)

where u1 >= u2 are the two largest eigenvalues of T^T T and T is the
Pauli correlation matrix.
"""

import logging
import math

import numpy as np

from chshtrap.chsh.observables import correlation_matrix
from chshtrap.core.types import TwoQubitState

logger = logging.getLogger(__name__)


def horodecki_max(state: TwoQubitState) -> float:
    """
    Maximum of the Bell function over all measurement settings.

    Args:
        state: Two-qubit state

    Returns:
        2 sqrt(u1 + u2)
    """
    t_matrix = correlation_matrix(state)
    eigenvalues = np.linalg.eigvalsh(t_matrix.T @ t_matrix)
    u1, u2 = float(eigenvalues[-1]), float(eigenvalues[-2])
    return 2.0 * math.sqrt(max(0.0, u1 + u2))
