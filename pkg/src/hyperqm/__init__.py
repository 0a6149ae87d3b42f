"""hyperqm: exact computational laboratory for the three composability classes.

Subpackages cover split-complex scalar geometry (`splitc`), matrices over
split-complex entries (`dmatrix`), the abstract two-product algebra framework
(`composability`), exact phase-space symbol calculus (`phasespace`), the
para functional-analysis property harness (`para_analysis`) and a CLI
(`cli`).
"""

__version__ = "0.1.0"

from . import (  # noqa: F401
    cli,
    composability,
    dmatrix,
    para_analysis,
    phasespace,
    report,
    rings,
    sampling,
    splitc,
)

__all__ = [
    "cli",
    "composability",
    "dmatrix",
    "para_analysis",
    "phasespace",
    "report",
    "rings",
    "sampling",
    "splitc",
    "__version__",
]
