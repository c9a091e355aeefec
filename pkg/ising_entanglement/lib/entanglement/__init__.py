from ising_entanglement.lib.entanglement.concurrence import (
    ConcurrenceResult,
    binary_entropy,
    concurrence,
    concurrence_bruteforce,
    entanglement_of_formation,
    from_lambdas,
    pure_state_concurrence,
    spin_flip,
)
from ising_entanglement.lib.entanglement.appendix import (
    AppendixResult,
    AppendixSpectrum,
    SpinFlipBlocks,
    appendix_oracle,
    appendix_spectrum,
    appendix_state,
    spin_flip_blocks,
)

__all__ = [
    "AppendixResult",
    "AppendixSpectrum",
    "ConcurrenceResult",
    "SpinFlipBlocks",
    "appendix_oracle",
    "appendix_spectrum",
    "appendix_state",
    "binary_entropy",
    "concurrence",
    "concurrence_bruteforce",
    "entanglement_of_formation",
    "from_lambdas",
    "pure_state_concurrence",
    "spin_flip",
    "spin_flip_blocks",
]
