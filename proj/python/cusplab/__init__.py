"""Cusp excursions, continued-fraction dimensions and multifractal spectra."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, InsufficientData, NumericError  # noqa: F401

__version__ = "0.1.0"
