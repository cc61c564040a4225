"""Worked objects over the 1|1-dimensional algebra with xx = x, xy = y, [x, y] = y."""

from __future__ import annotations

from .graded import LinearMap, TensorElement, dual_space, map_from_images
from .representation import Representation, coregular_rep
from .superalgebra import ONE_ONE, SuperAlgebra, family_1dim1


def example_algebra() -> SuperAlgebra:
    return family_1dim1(2, 1)


def example_coregular() -> Representation:
    return coregular_rep(example_algebra())


def t0() -> LinearMap:
    """Even: x* -> 0, y* -> y."""
    return map_from_images(dual_space(ONE_ONE), ONE_ONE, 0, [[0, 0], [0, 1]])


def t1() -> LinearMap:
    """Odd: x* -> y, y* -> -x."""
    return map_from_images(dual_space(ONE_ONE), ONE_ONE, 1, [[0, 1], [-1, 0]])


def r_t0() -> TensorElement:
    """y (x) y."""
    return TensorElement.from_terms(ONE_ONE, [("y", "y", 1)])


def r_t1() -> TensorElement:
    """x (x) y + y (x) x."""
    return TensorElement.from_terms(ONE_ONE, [("x", "y", 1), ("y", "x", 1)])


OPERATORS = {"t0": t0, "t1": t1}
TENSORS = {"r-t0": r_t0, "r-t1": r_t1}
