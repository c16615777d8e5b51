# numtheory/config.py
from __future__ import annotations

# Factoring stack defaults (overridden from settings.yaml / --seed at startup)
NT = {
    "seed": 20240601,          # Pollard-Brent start values and MR witnesses above 2^81
    "trial_limit": 1_000_000,  # trial division bound
    "max_bits": 128,           # composite cofactors above this are refused
    "mr_rounds": 64,           # random-base rounds above the deterministic range (error < 2^-128)
}
