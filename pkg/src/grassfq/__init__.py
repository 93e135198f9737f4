"""Grassmannians over finite fields: canonical forms, enumeration and exact counts."""

from .counting import (QPoly, coeff_poly, count, count_gaussian, count_pivot_sum,
                       eval_poly)
from .errors import (BudgetExceeded, DimensionMismatch, DivisionByZero,
                     EnumerationTooLarge, FieldMismatch, GrassfqError, InvalidDegree,
                     InvalidDimension, NonPrime, NotPrimePower)
from .field import FieldSpec, field_of_order, make_field, parse_field, parse_order
from .grassmannian import (EchelonForm, PivotSeq, Subspace, canonicalize, dim,
                           enumerate_grassmannian, enumerate_stratum, pivot_sequences,
                           span, stratum_size, subspace_contains, subspace_equal)
from .matrix import (Mat, RrefResult, coordinates, is_rref, rank, row_space_contains,
                     rref)
from .oracle import brute_force_subspaces, cross_check

__version__ = "0.1.0"
