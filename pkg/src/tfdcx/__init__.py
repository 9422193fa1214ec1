"""Circuit complexity of the driven-oscillator thermofield pair state.

Core modules are pure numerics on 3x3 affine phase-space matrices; the
``service`` subpackage wraps them in a FastAPI app and ``cli`` is a thin
client over it.
"""

__version__ = "0.1.0"

from .complexity import (
    ComplexityCurve,
    ComplexitySample,
    complexity_at,
    cost_from_spectrum,
    curve,
    sweep,
)
from .generators import Mode
from .params import DerivedParams, ModelParams, PhysicalOscillator, derive, from_physical
from .spectrum import RelativeSpectrum, SpectrumMethod

__all__ = [
    "__version__",
    "ComplexityCurve",
    "ComplexitySample",
    "DerivedParams",
    "Mode",
    "ModelParams",
    "PhysicalOscillator",
    "RelativeSpectrum",
    "SpectrumMethod",
    "complexity_at",
    "cost_from_spectrum",
    "curve",
    "derive",
    "from_physical",
    "sweep",
]
