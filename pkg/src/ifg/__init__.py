"""Independence-friendly logic over finite structures.

Game and team semantics for IFG formulas, the set algebras of formula
meanings, and a finite-lattice lab for the monadic algebras they induce.
"""

from .errors import IfgError, ParseError, GuardExceeded

__all__ = ["IfgError", "ParseError", "GuardExceeded"]
__version__ = "0.1.0"
