"""Genus-zero Lefschetz fibrations, Kirby diagrams and integral forms.

Submodules: ``freegroup``, ``curves``, ``mcg``, ``forms``, ``kirby``,
``palf``, ``formats``, ``catalog``, ``selftest`` and ``cli``.
"""

from . import catalog, curves, formats, forms, freegroup, kirby, mcg, palf, selftest
from .catalog import MarkedDiagram, PlugParams, manifold_A, manifold_B, plug_palf, plug_twist
from .forms import IntSymForm, congruent
from .kirby import KirbyDiagram
from .palf import PalfDescription

__version__ = "0.1.0"

__all__ = [
    "catalog", "curves", "formats", "forms", "freegroup", "kirby", "mcg", "palf", "selftest",
    "MarkedDiagram", "PlugParams", "manifold_A", "manifold_B", "plug_palf", "plug_twist",
    "IntSymForm", "congruent", "KirbyDiagram", "PalfDescription",
]
