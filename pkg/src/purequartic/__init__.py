"""2-adic class number criteria for Q(p^(1/4)) and Q(sqrt(-2p))."""

from .criteria import Ord2Prediction, predict_ord2_h2p, predict_ord2_hK, relation_check
from .formclass import class_number, h2p
from .modular import is_prime, jacobi, quartic_symbol, quartic_symbol_2, sqrt_mod
from .zsqrt2 import Zsqrt2, decompose, invariant

__all__ = [
    "Ord2Prediction", "Zsqrt2", "class_number", "decompose", "h2p", "invariant",
    "is_prime", "jacobi", "predict_ord2_h2p", "predict_ord2_hK", "quartic_symbol",
    "quartic_symbol_2", "relation_check", "sqrt_mod",
]
