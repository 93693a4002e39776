"""Exact Smith normal form over Z, Q[x] and Z + xQ[x] via Gelfand-element reduction."""

from .rings import (
    H,
    QX,
    GcdCertificate,
    RingElement,
    RingId,
    Z,
    canonical,
    coprime,
    divides,
    exact_div,
    gcd_many,
    is_unit,
    parse_element,
    xgcd,
)

__all__ = [
    "H",
    "QX",
    "Z",
    "GcdCertificate",
    "RingElement",
    "RingId",
    "canonical",
    "coprime",
    "divides",
    "exact_div",
    "gcd_many",
    "is_unit",
    "parse_element",
    "xgcd",
]

__version__ = "0.1.0"
