"""
Tools Module

Contains the numerical tools, organized by functionality:
- heun: Confluent Heun series evaluation and truncation
- rabi: Analytic solutions, condition functions and Fock states
- judd: Exceptional spectrum
- oracle: Truncated Fock space diagonalization
- spectrum: Root scanning, spectrum assembly and oracle comparison
- reporting, commands: Tables shared by the command line and the tool server
"""

from . import heun
from . import rabi
from . import judd
from . import oracle
from . import spectrum

__all__ = [
    'heun',
    'rabi',
    'judd',
    'oracle',
    'spectrum',
]
