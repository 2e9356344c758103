"""
chsh-trap - CHSH-Bell nonlocality of two qubits under amplitude damping.

Two qubits start in an extended Werner-like state and decay into
independent zero-temperature reservoirs. The decay enters only through
the population parameter x = |q(t)|^2.

Outputs:
    - Restricted closed-form Bell maximum with its achieving settings
    - Horodecki maximum over all settings
    - Brute-force oracle over all measurement angles
    - Violation thresholds in x, critical purity, and time series under
      Markovian, Lorentzian and trapping reservoirs

Conventions:
    - Basis {|11>, |10>, |01>, |00>}, 1 = excited
    - Violation means B > 2; the Tsirelson bound is 2 sqrt(2)
"""

from chshtrap.core.types import (
    BellEvaluation,
    ChshSettings,
    EWLParams,
    Evaluator,
    StateFamily,
    TwoQubitState,
    XStateView,
)

__version__ = "1.0.0"

__all__ = [
    "BellEvaluation",
    "ChshSettings",
    "EWLParams",
    "Evaluator",
    "StateFamily",
    "TwoQubitState",
    "XStateView",
    "__version__",
]
