# engine/config.py
from __future__ import annotations

ENGINE = {
    "bound": 500,            # max_c for the kappa search
    "heronian_only": False,  # let the beta/3-square filter decide verdicts
    "precision": 50,         # decimal digits for degree-4 witness points
}
