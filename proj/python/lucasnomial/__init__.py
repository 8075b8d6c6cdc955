"""Exact Lucas polynomials, lucasnomial coefficients and tiling interpretations."""

import json

from ._core import (
    DomainError,
    Error,
    IndivisibleError,
    InternalParityError,
    ParseError,
    Polynomial,
    ResourceError,
    complement,
    gaussian_binomial,
    lucas_F,
    lucas_L,
    lucas_factorial,
    lucasnomial,
    partitions,
    rhs_circular,
    rhs_linear,
    specialize,
    table,
    tiling_gf,
    tilings,
)
from ._core import _verify_json


def verify(identity, m_max=3, n_max=3, mode="gf", flavor="both", parallel=False):
    """Run an identity check and return the report as a dict.

    ``identity`` is one of "lemma1", "recursions" (bound m+n <= n_max) or "theorem".
    """
    return json.loads(_verify_json(identity, m_max, n_max, mode, flavor, parallel))


__all__ = [
    "DomainError",
    "Error",
    "IndivisibleError",
    "InternalParityError",
    "ParseError",
    "Polynomial",
    "ResourceError",
    "complement",
    "gaussian_binomial",
    "lucas_F",
    "lucas_L",
    "lucas_factorial",
    "lucasnomial",
    "partitions",
    "rhs_circular",
    "rhs_linear",
    "specialize",
    "table",
    "tiling_gf",
    "tilings",
    "verify",
]
