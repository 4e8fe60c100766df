"""Predicted 2-adic valuations of h(-2p) and of h_K, K = Q(p^(1/4)).

Every prediction is either exact or a lower bound; the lower bounds mark the
cases where no finer criterion is known, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import InvalidInput
from .modular import is_prime, quartic_symbol, quartic_symbol_2
from .zsqrt2 import decompose, invariant


class Branch(str, Enum):
    # h(-2p)
    H2P_PM3_MOD8 = "Redei-pm3mod8"
    H2P_7_MOD16 = "Hasse-7mod16"
    H2P_15_MOD16 = "LeonardWilliams-15mod16"
    H2P_15_MOD16_BOUND = "LeonardWilliams-15mod16-bound"
    H2P_1_MOD8_QUARTIC2 = "quartic2-1mod8"
    H2P_1_MOD8_QUARTICU = "quarticu-1mod8"
    H2P_1_MOD8_BOUND = "quarticu-1mod8-bound"
    # h_K
    HK_PM3_MOD8 = "hK-2-or-pm3mod8"
    HK_PM7_MOD16 = "hK-pm7mod16"
    HK_1_MOD16_QUARTIC2 = "hK-1mod16-quartic2"
    HK_1_MOD16_BOUND = "hK-1mod16-bound"
    HK_15_MOD16_BOUND = "hK-15mod16-bound"
    HK_15_MOD16_CONJ = "hK-15mod16-conjecture"
    HK_15_MOD16_CONJ_BOUND = "hK-15mod16-conjecture-bound"


@dataclass(frozen=True)
class Ord2Prediction:
    value: int
    exact: bool
    branch: Branch
    symbols_used: tuple[tuple[str, int], ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "branch": self.branch.value,
            "symbols_used": dict(self.symbols_used),
        }


def _require_prime(p: int, odd: bool = True) -> None:
    if not is_prime(p) or (odd and p == 2):
        raise InvalidInput(f"{p} is not an {'odd ' if odd else ''}prime")


def lw_sign(p: int) -> int:
    """(-1)^((p+1)/16) for p = 15 (mod 16)."""
    return -1 if ((p + 1) // 16) % 2 else 1


def predict_ord2_h2p(p: int) -> Ord2Prediction:
    _require_prime(p)
    if p % 8 in (3, 5):
        return Ord2Prediction(1, True, Branch.H2P_PM3_MOD8)
    if p % 16 == 7:
        return Ord2Prediction(2, True, Branch.H2P_7_MOD16)
    if p % 16 == 15:
        inv = invariant(p)
        used = (("invariant", inv), ("sign", lw_sign(p)))
        if lw_sign(p) * inv == -1:
            return Ord2Prediction(3, True, Branch.H2P_15_MOD16, used)
        return Ord2Prediction(4, False, Branch.H2P_15_MOD16_BOUND, used)
    # p = 1 mod 8
    q2 = quartic_symbol_2(p)
    if q2 == -1:
        return Ord2Prediction(2, True, Branch.H2P_1_MOD8_QUARTIC2, (("quartic2", q2),))
    qu = quartic_symbol(decompose(p).u, p)
    used = (("quartic2", q2), ("quartic_u", qu))
    if qu == -1:
        return Ord2Prediction(3, True, Branch.H2P_1_MOD8_QUARTICU, used)
    return Ord2Prediction(4, False, Branch.H2P_1_MOD8_BOUND, used)


def predict_ord2_hK(p: int, assume_conjecture: bool = False) -> Ord2Prediction:
    _require_prime(p, odd=False)
    if p == 2 or p % 8 in (3, 5):
        return Ord2Prediction(0, True, Branch.HK_PM3_MOD8)
    if p % 16 in (7, 9):
        return Ord2Prediction(1, True, Branch.HK_PM7_MOD16)
    if p % 16 == 1:
        q2 = quartic_symbol_2(p)
        if q2 == -1:
            return Ord2Prediction(1, True, Branch.HK_1_MOD16_QUARTIC2, (("quartic2", q2),))
        return Ord2Prediction(2, False, Branch.HK_1_MOD16_BOUND, (("quartic2", q2),))
    # p = 15 mod 16
    if not assume_conjecture:
        return Ord2Prediction(2, False, Branch.HK_15_MOD16_BOUND)
    inv = invariant(p)
    if inv == -1:
        return Ord2Prediction(2, True, Branch.HK_15_MOD16_CONJ, (("invariant", inv),))
    return Ord2Prediction(3, False, Branch.HK_15_MOD16_CONJ_BOUND, (("invariant", inv),))


def relation_check(p: int) -> Optional[bool]:
    """ord2 h(-2p) = ord2 h_K + 1 where both sides are known exactly;
    None outside p = +-3 (mod 8) and p = 7 (mod 16)."""
    _require_prime(p)
    if p % 8 not in (3, 5) and p % 16 != 7:
        return None
    return predict_ord2_h2p(p).value == predict_ord2_hK(p).value + 1
