from theta.classes import (
    ThetaClass, RationalSide, QuadSurd, Biquadratic, NonBiquadratic,
    NonPositiveTheta, QUARTIC_FORM, ALPHA_NONPOSITIVE,
)
from theta.parser import ThetaParseError, NestingTooDeep, parse_theta
from theta.rescale import rescale

__all__ = [
    "ThetaClass", "RationalSide", "QuadSurd", "Biquadratic", "NonBiquadratic",
    "NonPositiveTheta", "QUARTIC_FORM", "ALPHA_NONPOSITIVE",
    "ThetaParseError", "NestingTooDeep", "parse_theta", "rescale",
]
