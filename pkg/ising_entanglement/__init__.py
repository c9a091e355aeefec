# Root package marker for ising_entanglement
from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("ising-entanglement")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "0.1.0"

__all__ = ["__version__"]
