#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Copyright (C) 2026-2026 FFQue Authors
# All rights reserved.
#
# This file is part of FFQue.

from typing import Union

from fractions import Fraction

from .field import (
    FieldElt,
    check_modulus,
    inverse,
)
from .poly import (
    NEG_INF,
    Poly,
)
from .laurent import (
    EXACT,
    Laurent,
)
from .enumerate import (
    Factorization,
    count_irreducibles,
    divisor_degrees,
    divisors,
    enumerate_polys,
    enumerate_up_to,
    factor,
    integer_mobius,
    irreducibles,
    is_irreducible,
    residues,
    squarefree_divisors,
)
from .matrix import (
    PolyMatrix,
    bounded_elements,
    involution,
    pgl2_constant,
    unipotent,
)


def norm(x: Union[Poly, Laurent]) -> Fraction:
    """
    |x| for a polynomial (q^deg) or a Laurent series (q^-valuation); |0| = 0
    """
    return Fraction(x.norm)
