from exactnum.rat import Rat, parse_rat, format_rat, is_rational_square
from exactnum.squarefree import squarefree_decompose, is_squarefree
from exactnum.quadext import QuadExt, RadicandMismatch, quadext_sign

__all__ = [
    "Rat", "parse_rat", "format_rat", "is_rational_square",
    "squarefree_decompose", "is_squarefree",
    "QuadExt", "RadicandMismatch", "quadext_sign",
]
