from numtheory.config import NT
from numtheory.primes import (
    Factorization, FactoringBudgetExceeded, factorize, is_probable_prime,
)
from numtheory.residues import NotOddPrime, NonResidue, legendre, sqrt_mod
from numtheory.forms import (
    FormRep, FormConditionError, NotSquarefree,
    represent_prime, compose_reps, good_squarefree, represent_q, bad_prime,
)
from numtheory.squares import three_square_admissible, three_square_obstruction

__all__ = [
    "NT", "Factorization", "FactoringBudgetExceeded", "factorize", "is_probable_prime",
    "NotOddPrime", "NonResidue", "legendre", "sqrt_mod",
    "FormRep", "FormConditionError", "NotSquarefree",
    "represent_prime", "compose_reps", "good_squarefree", "represent_q", "bad_prime",
    "three_square_admissible", "three_square_obstruction",
]
